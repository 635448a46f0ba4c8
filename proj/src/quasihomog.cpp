#include "germforge/quasihomog.hpp"

#include "germforge/errors.hpp"

#include <cmath>
#include <numeric>

namespace germforge {

namespace {

// Scales a positive rational vector to coprime integers.
std::optional<std::vector<long>> primitive_integers(const std::vector<Rat>& v) {
  mpz_class lcm = 1;
  for (const auto& x : v) {
    if (sgn(x) <= 0) {
      return std::nullopt;
    }
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  }
  std::vector<mpz_class> ints;
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class n = x.get_num() * (lcm / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    ints.push_back(n);
  }
  std::vector<long> out;
  for (auto& n : ints) {
    n /= g;
    if (!n.fits_slong_p()) {
      return std::nullopt;
    }
    out.push_back(n.get_si());
  }
  return out;
}

} // namespace

std::optional<std::vector<long>> positive_kernel_vector(const RatMatrix& a, long bound) {
  const auto basis = a.nullspace();
  if (basis.empty()) {
    return std::nullopt;
  }
  const auto r = basis.size();
  // keep the enumeration near 2e5 points
  const long per_axis =
      std::max<long>(1, std::min<long>(bound, static_cast<long>(std::pow(2.0e5, 1.0 / static_cast<double>(r)))));
  std::optional<std::vector<long>> best;
  std::vector<long> t(r, 1);
  const auto cols = a.cols();
  for (;;) {
    std::vector<Rat> v(cols);
    for (std::size_t j = 0; j < r; ++j) {
      for (std::size_t c = 0; c < cols; ++c) {
        v[c] += Rat(t[j]) * basis[j][c];
      }
    }
    if (auto p = primitive_integers(v)) {
      if (!best || *p < *best) {
        best = std::move(p);
      }
    }
    std::size_t j = 0;
    while (j < r && t[j] == per_axis) {
      t[j] = 1;
      ++j;
    }
    if (j == r) {
      break;
    }
    ++t[j];
  }
  return best;
}

std::optional<WeightSystem> find_weights(const Polynomial& g) {
  if (g.is_zero()) {
    throw precondition_error("find_weights needs a nonzero function");
  }
  if (!is_zero(g.constant_term())) {
    throw precondition_error("find_weights needs g(0) = 0");
  }
  const auto d = g.context().size();
  RatMatrix a(g.term_count(), d + 1);
  std::size_t row = 0;
  for (const auto& [m, c] : g.terms()) {
    for (std::size_t i = 0; i < d; ++i) {
      a(row, i) = m.exps[i];
    }
    a(row, d) = -1;
    ++row;
  }
  auto v = positive_kernel_vector(a);
  if (!v) {
    return std::nullopt;
  }
  WeightSystem ws;
  ws.weights.assign(v->begin(), v->begin() + static_cast<std::ptrdiff_t>(d));
  ws.degree = v->back();
  return ws;
}

std::optional<MapWeights> find_map_weights(std::span<const Polynomial> components) {
  if (components.empty()) {
    return std::nullopt;
  }
  const auto n = components.front().context().size();
  const auto p = components.size();
  std::size_t rows = 0;
  for (const auto& c : components) {
    rows += c.term_count();
  }
  RatMatrix a(std::max<std::size_t>(rows, 1), n + p);
  std::size_t row = 0;
  for (std::size_t i = 0; i < p; ++i) {
    for (const auto& [m, c] : components[i].terms()) {
      if (m.is_one()) {
        return std::nullopt;
      }
      for (std::size_t j = 0; j < n; ++j) {
        a(row, j) = m.exps[j];
      }
      a(row, n + i) = -1;
      ++row;
    }
  }
  auto v = positive_kernel_vector(a, 16);
  if (!v) {
    return std::nullopt;
  }
  MapWeights mw;
  mw.source.assign(v->begin(), v->begin() + static_cast<std::ptrdiff_t>(n));
  mw.target.assign(v->begin() + static_cast<std::ptrdiff_t>(n), v->end());
  return mw;
}

bool is_r_equiv_quasihomogeneous(const Polynomial& g, int k_max) {
  const auto mu = milnor(g, k_max).dimension;
  const auto tau = tjurina(g, k_max).dimension;
  return find_weights(g).has_value() || mu == tau;
}

} // namespace germforge
