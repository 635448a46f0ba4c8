#pragma once

#include "germforge/dense.hpp"
#include "germforge/local_algebra.hpp"
#include "germforge/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace germforge {

/// g(s^{w_1} z_1, ..., s^{w_d} z_d) = s^degree g(z), normalized so the gcd is 1.
struct WeightSystem {
  std::vector<long> weights;
  long degree = 0;

  bool operator==(const WeightSystem&) const = default;
};

/// Weights on source variables and weighted degrees of each component of a map.
struct MapWeights {
  std::vector<long> source;
  std::vector<long> target;

  bool operator==(const MapWeights&) const = default;
};

/// Lexicographically smallest primitive positive integer vector in ker A found
/// with free coordinates bounded by `bound`.
std::optional<std::vector<long>> positive_kernel_vector(const RatMatrix& a, long bound = 64);

std::optional<WeightSystem> find_weights(const Polynomial& g);
std::optional<MapWeights> find_map_weights(std::span<const Polynomial> components);

/// True when g has weights, or mu(g) == tau(g) (Saito: an isolated singularity is
/// R-equivalent to a quasihomogeneous one exactly when mu = tau).
bool is_r_equiv_quasihomogeneous(const Polynomial& g, int k_max = default_quotient_order);

} // namespace germforge
