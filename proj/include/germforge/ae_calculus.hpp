#pragma once

// Jet model of the extended tangent space T A_e f = tf(theta_n) + wf(theta_p).
//
// At order k the model is the span, inside J^k theta(f), of the truncations of
// tf(x^a d/dx_j) and wf(Y^b e_i). Truncation is exact for these spanning sets
// (fields of degree > k contribute nothing), so the quotient dimension is a
// lower bound for the A_e-codimension, non-decreasing in k. A zero quotient at
// k >= p certifies stability (Mather's criterion with m^{p+1} theta(f)).
//
// The truncated model alone never certifies anything. For a finite germ,
// N = theta(f) / T A_e f is a finitely generated O_p-module through f^*, so
// E(j) = dim theta(f) / (T A_e f + f^*m_p^j theta(f)) is computable exactly
// (the O_n-module tf(theta_n) + f^*m_p^j theta(f) has a Nakayama certificate)
// and E(j) = E(j+1) forces m_p^j N = 0, hence A_e-codim f = E(j).
// Quasihomogeneous germs use the grading instead, which needs lower orders.
//
// When f is weighted homogeneous the spanning set is homogeneous for the
// induced grading on theta(f); the matrix then splits into independent blocks.

#include "germforge/echelon.hpp"
#include "germforge/germ.hpp"
#include "germforge/jet_space.hpp"

#include <span>
#include <string>
#include <vector>

namespace germforge {

struct VectorFieldAlongF {
  std::vector<Polynomial> components;

  /// Highest total degree among components; -1 for the zero field.
  int degree() const;
  bool is_zero() const;
  std::string to_string() const;

  friend bool operator==(const VectorFieldAlongF&, const VectorFieldAlongF&) = default;
};

struct JetOptions {
  Execution exec = Execution::parallel;
  bool use_grading = true;
};

class JetModel {
public:
  JetModel(const MapGerm& f, unsigned order, JetOptions options = {});

  const MapGerm& germ() const noexcept { return f_; }
  unsigned order() const noexcept { return order_; }
  std::size_t columns() const noexcept { return index_.size() * f_.p(); }
  const EchelonBasis& image() const noexcept { return image_; }
  bool graded() const noexcept { return graded_; }

  /// dim J^k theta(f) / (T A_e f + m^{k+1} theta(f)).
  std::size_t codim() const { return columns() - image_.rank(); }
  /// Monomial fields complementing the image, lowest degree preferred.
  const std::vector<VectorFieldAlongF>& normal_basis() const noexcept { return normal_basis_; }

  SparseRow encode(const VectorFieldAlongF& v) const;
  VectorFieldAlongF decode(const SparseRow& row) const;
  bool in_image(const VectorFieldAlongF& v) const;
  /// Rank of the classes of `fields` in the jet quotient.
  std::size_t quotient_rank(std::span<const VectorFieldAlongF> fields) const;

private:
  MapGerm f_;
  unsigned order_;
  MonomialIndex index_;
  bool graded_ = false;
  EchelonBasis image_;
  std::vector<VectorFieldAlongF> normal_basis_;
};

/// Spanning rows of the tangent image at order k (tf rows first, then wf rows).
/// Exposed for the kernel benchmarks and tests.
std::vector<SparseRow> tangent_rows(const MapGerm& f, const MonomialIndex& index, Execution exec);

JetModel tangent_image(const MapGerm& f, unsigned k, JetOptions options = {});

struct FiltrationStep {
  std::size_t dimension = 0; ///< E(j)
  int order = 0;             ///< jet order k with m^k theta(f) inside tf(theta_n) + f^*m_p^j theta(f)
};

/// E(j) with its certificate; jet orders below `start` are skipped.
FiltrationStep ae_filtration_quotient(const MapGerm& f, unsigned j, int k_budget = default_ae_budget,
                                      JetOptions options = {}, int start = 1);

struct AeCodimResult {
  std::size_t codim = 0;
  std::vector<VectorFieldAlongF> basis;
  /// Jet order at which the truncated model is exact.
  int certified_order = 0;
  /// j with f^*m_p^j theta(f) inside T A_e f, when that certificate was used.
  unsigned filtration_power = 0;
  std::string method;
};

/// Exact A_e-codimension of a finite germ. Throws not_certified when f is not
/// finite or a certificate needs a jet order beyond the budget.
AeCodimResult ae_codim(const MapGerm& f, int k_budget = default_ae_budget, JetOptions options = {});

/// Initial speeds of every parameter as fields along the base germ.
std::vector<VectorFieldAlongF> initial_speeds(const Unfolding& unfolding);

/// T A_e f + Sp{speeds} fills the jet space at the certified order of f.
bool is_versal(const Unfolding& unfolding, int k_budget = default_ae_budget, JetOptions options = {});

} // namespace germforge
