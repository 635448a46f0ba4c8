#pragma once

// Codimension and versal unfoldings of augmentations A_{F,g}(f).
//
// codim(A_{F,g}(f)) >= codim(f) * tau(g) always, with equality when g is
// R-equivalent to a quasihomogeneous function or F is substantial. A versal
// unfolding then has the k*r parameters
//   (f_{g(z) + sum_s l_{s,1} tau_s(z)}(x) + sum_s sum_{m>=2} l_{s,m} tau_s(z) gamma_m(x), z, l)
// where tau_1..tau_r is a monomial basis of O_d/(g + Jg) and gamma_1..gamma_k
// a basis of N A_e f with gamma_1 the initial speed of F.

#include "germforge/ae_calculus.hpp"
#include "germforge/germ.hpp"
#include "germforge/local_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

struct AugmentationCodim {
  std::size_t value = 0;
  /// Neither hypothesis holds: value is only a lower bound.
  bool lower_bound_only = false;
  std::size_t f_codim = 0;
  std::size_t tau = 0;
  int tau_order = 0;
  bool quasihomogeneous = false;
};

AugmentationCodim augmentation_codim(std::size_t f_codim, const Polynomial& g, SubstantialFlag substantial = {},
                                     int k_max = default_quotient_order);

struct AugmentedGerm {
  MapGerm result;
  MapGerm f;
  Opsu F;
  Polynomial g;
  std::vector<Monomial> tau_basis;           ///< tau_1..tau_r over g's variables, tau_r = 1
  std::vector<VectorFieldAlongF> gamma_basis; ///< gamma_1..gamma_k along f
  AugmentationCodim codim;
  int f_order = 0; ///< certified order of ae_codim(f)
};

AugmentedGerm make_augmented(const MapGerm& f, const Opsu& F, const Polynomial& g, SubstantialFlag substantial = {},
                             int k_budget = default_ae_budget);

/// Parameter names used by build_versal: lam<s>_<m>, suffixed with '_' on clashes.
std::vector<std::string> versal_parameter_names(const AugmentedGerm& a);

/// Throws hypotheses_unmet for lower-bound-only inputs or stable f.
Unfolding build_versal(const AugmentedGerm& a);

/// is_versal(V) and V has exactly k*r parameters.
bool verify_versal(const AugmentedGerm& a, const Unfolding& V, int k_budget = default_ae_budget);

/// Removes one parameter by setting it to zero.
Unfolding drop_parameter(const Unfolding& V, std::size_t index);

/// The fields tau_s(z) gamma_m(x) over zeros, along the augmentation; s outer, m inner.
std::vector<VectorFieldAlongF> lifted_fields(const AugmentedGerm& a);

struct LiftedFieldCheck {
  std::size_t count = 0;
  std::size_t nonzero = 0;
  std::size_t rank = 0;
  int order = 0;

  bool all_nonzero() const noexcept { return nonzero == count; }
  bool independent() const noexcept { return rank == count; }
};

/// Checks the lifted fields in the jet quotient of the augmentation at its
/// certified order.
LiftedFieldCheck check_lifted_fields(const AugmentedGerm& a, int k_budget = default_ae_budget);

} // namespace germforge
