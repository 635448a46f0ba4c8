#pragma once

#include "germforge/germ.hpp"
#include "germforge/poly.hpp"

#include <ostream>
#include <random>
#include <string>
#include <vector>

namespace germforge::testing {

inline ContextPtr vars(std::vector<std::string> names) { return VarContext::make(std::move(names)); }

inline Polynomial P(const std::string& text, const ContextPtr& ctx) { return parse_poly(text, ctx); }

inline MapGerm germ(const std::string& text) { return parse_map_germ(text); }

/// Random polynomial with small integer or half-integer coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, const ContextPtr& ctx, unsigned max_degree, int terms,
                              unsigned min_degree = 0) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<unsigned> deg(min_degree, max_degree);
  Polynomial p(ctx);
  for (int t = 0; t < terms; ++t) {
    Monomial m(ctx->size());
    const unsigned d = deg(rng);
    for (unsigned i = 0; i < d; ++i) {
      m.exps[std::uniform_int_distribution<std::size_t>(0, ctx->size() - 1)(rng)]++;
    }
    p.add_term(m, make_rat(coeff(rng), den(rng)));
  }
  return p;
}

/// Count of monomials not divisible by any generator, searched up to `bound`.
inline std::size_t standard_monomial_count(const std::vector<Monomial>& generators, std::size_t nvars,
                                           unsigned bound) {
  std::size_t count = 0;
  for (const auto& m : monomials_up_to(nvars, bound)) {
    bool divisible = false;
    for (const auto& g : generators) {
      divisible = divisible || g.divides(m);
    }
    count += divisible ? 0 : 1;
  }
  return count;
}

} // namespace germforge::testing

namespace germforge {

inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const MapGerm& f, std::ostream* os) { *os << f.to_string(); }

} // namespace germforge
