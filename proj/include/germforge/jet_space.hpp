#pragma once

#include "germforge/poly.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace germforge {

/// Monomials of degree <= k in a fixed number of variables, indexed in
/// descending graded-lexicographic order (index 0 is the highest monomial, so it
/// has the highest pivot priority).
class MonomialIndex {
public:
  MonomialIndex(std::size_t nvars, unsigned max_degree);

  std::size_t size() const noexcept { return monomials_.size(); }
  unsigned max_degree() const noexcept { return max_degree_; }
  const Monomial& monomial(std::size_t i) const { return monomials_[i]; }
  std::optional<std::uint32_t> index(const Monomial& m) const;

private:
  unsigned max_degree_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::uint32_t> lookup_;
};

} // namespace germforge
