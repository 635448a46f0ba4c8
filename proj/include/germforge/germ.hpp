#pragma once

#include "germforge/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// f : (K^n, 0) -> (K^p, 0), components polynomial in the source variables.
class MapGerm {
public:
  MapGerm(ContextPtr source, std::vector<Polynomial> components, std::string name = {});

  std::size_t n() const noexcept { return source_->size(); }
  std::size_t p() const noexcept { return components_.size(); }
  const ContextPtr& source() const noexcept { return source_; }
  const std::vector<Polynomial>& components() const noexcept { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// "(y^2, y^3 + z^3*y, z)".
  std::string to_string() const;

  friend bool operator==(const MapGerm& a, const MapGerm& b) {
    return a.source_ == b.source_ ? a.components_ == b.components_
                                  : *a.source_ == *b.source_ && a.components_ == b.components_;
  }

private:
  ContextPtr source_;
  std::vector<Polynomial> components_;
  std::string name_;
};

/// Parses comma- or semicolon-separated components. Variables default to the
/// order of first appearance.
MapGerm parse_map_germ(std::string_view text, std::optional<std::vector<std::string>> vars = std::nullopt,
                       std::string name = {});

/// F(x, l) = (f_l(x), l) with l the last m source variables.
class Unfolding {
public:
  /// `deformation` holds the p components f_l(x) over the context (x..., l...).
  /// Throws not_an_unfolding if setting l = 0 does not recover `base`.
  Unfolding(MapGerm base, std::vector<std::string> params, std::vector<Polynomial> deformation);

  const MapGerm& base() const noexcept { return base_; }
  std::size_t m() const noexcept { return params_.size(); }
  const std::vector<std::string>& params() const noexcept { return params_; }
  /// The unfolding as a germ (n+m) -> (p+m); last m components are the parameters.
  const MapGerm& map() const noexcept { return map_; }
  /// f_l(x): the first p components of map().
  std::vector<Polynomial> deformation() const;

private:
  MapGerm base_;
  std::vector<std::string> params_;
  MapGerm map_;
};

struct StabilityCertificate {
  std::optional<int> jet_order; ///< set when certified by the jet computation
  bool user_asserted = false;
};

/// One-parameter stable unfolding.
struct Opsu {
  Unfolding unfolding;
  StabilityCertificate certificate;

  const std::string& param() const { return unfolding.params().front(); }
};

/// Houses the substantiality hypothesis; never inferred.
struct SubstantialFlag {
  bool asserted = false;
};

inline constexpr int default_ae_budget = 12;

/// Certifies A_e-codim(F) = 0 through the jet model. Throws not_stable or not_certified.
Opsu check_opsu(const Unfolding& unfolding, int k_budget = default_ae_budget);
Opsu assert_opsu(const Unfolding& unfolding);

/// A_{F,g}(f)(x, z) = (f_{g(z)}(x), z). Source context is (x..., z...).
MapGerm augment(const MapGerm& f, const Opsu& opsu, const Polynomial& g);

/// Initial speed d f_l / d l_i at l = 0 as a field along the base germ.
std::vector<Polynomial> initial_speed(const Unfolding& unfolding, std::size_t param_index);

} // namespace germforge
