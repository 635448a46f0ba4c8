#include "support.hpp"

#include "germforge/ade.hpp"
#include "germforge/errors.hpp"
#include "germforge/local_algebra.hpp"
#include "germforge/quasihomog.hpp"

#include <gtest/gtest.h>

using namespace germforge;
using namespace germforge::testing;

// For x^{k+1} + y^2 the Jacobian ideal is the monomial ideal (x^k, y).
TEST(Milnor, AkMatchesMonomialCount) {
  const auto ctx = vars({"x", "y"});
  for (unsigned k = 1; k <= 8; ++k) {
    const auto g = P("x^" + std::to_string(k + 1) + " + y^2", ctx);
    const std::vector<Monomial> jac = {Monomial({k, 0}), Monomial({0, 1})};
    const auto oracle = standard_monomial_count(jac, 2, 2 * k + 2);
    EXPECT_EQ(milnor(g).dimension, oracle) << "A" << k;
    EXPECT_EQ(tjurina(g).dimension, oracle) << "A" << k;
  }
}

TEST(Milnor, BrievskornPham) {
  const auto ctx = vars({"x", "y", "z"});
  EXPECT_EQ(milnor(P("x^3 + y^4 + z^5", ctx)).dimension, 2u * 3u * 4u);
  EXPECT_EQ(milnor(P("x^2 + y^2 + z^2", ctx)).dimension, 1u);
}

TEST(Milnor, AdeNormalForms) {
  for (const auto& [label, mu] : std::vector<std::pair<std::string, std::size_t>>{
           {"A1", 1}, {"A4", 4}, {"D4", 4}, {"D6", 6}, {"E6", 6}, {"E7", 7}, {"E8", 8}}) {
    for (std::size_t n : {2u, 3u}) {
      std::vector<std::string> names = {"x", "y", "z"};
      names.resize(n);
      const auto g = ade_normal_form(label, vars(names));
      EXPECT_EQ(milnor(g).dimension, mu) << label;
      EXPECT_EQ(tjurina(g).dimension, mu) << label;
    }
  }
}

TEST(Tjurina, DiffersFromMilnorOffTheQuasihomogeneousLocus) {
  const auto ctx = vars({"x", "y"});
  const auto g = P("x^5 + y^5 + x^3*y^3", ctx);
  EXPECT_EQ(milnor(g).dimension, 16u);
  EXPECT_EQ(tjurina(g).dimension, 15u);
  EXPECT_FALSE(is_r_equiv_quasihomogeneous(g));
}

TEST(Quotient, NonIsolatedIsNotCertified) {
  const auto ctx = vars({"x", "y"});
  EXPECT_THROW(milnor(P("x^2*y^2", ctx), 10), not_certified);
}

TEST(Quotient, BasisHasConstantLast) {
  const auto ctx = vars({"z"});
  const auto basis = quotient_monomial_basis(P("z^3", ctx));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_TRUE(basis.back().is_one());
}

TEST(Quotient, SerialAndParallelAgree) {
  const auto ctx = vars({"x", "y", "z"});
  const auto g = P("x^3 + y^6 + x^2*y^2 + z^2", ctx);
  const auto jac = jacobian(g);
  const auto a = quotient_dim(jac, g.context_ptr(), 24, Execution::serial);
  const auto b = quotient_dim(jac, g.context_ptr(), 24, Execution::parallel);
  EXPECT_EQ(a.dimension, b.dimension);
  EXPECT_EQ(a.monomial_basis, b.monomial_basis);
  EXPECT_EQ(a.certificate_order, b.certificate_order);
}

TEST(Weights, FindsNormalizedWeights) {
  const auto ctx = vars({"x", "y"});
  const auto w = find_weights(P("x^3 + y^6 + x^2*y^2", ctx));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->weights, (std::vector<long>{2, 1}));
  EXPECT_EQ(w->degree, 6);
  EXPECT_FALSE(find_weights(P("x^5 + y^5 + x^3*y^3", ctx)));
}

TEST(Weights, MapWeights) {
  const auto f = germ("x; t^4 + x*t");
  const auto w = find_map_weights(f.components());
  ASSERT_TRUE(w);
  EXPECT_EQ(w->source, (std::vector<long>{3, 1}));
  EXPECT_EQ(w->target, (std::vector<long>{3, 4}));
}

namespace {

// Linear part invertible, higher part random: a jet-invertible change of coordinates.
std::vector<Polynomial> random_diffeo(std::mt19937_64& rng, const ContextPtr& ctx) {
  const auto n = ctx->size();
  for (;;) {
    RatMatrix lin(n, n);
    std::uniform_int_distribution<int> c(-2, 2);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        lin(i, j) = c(rng);
      }
    }
    if (lin.rank() < n) {
      continue;
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial p = random_poly(rng, ctx, 3, 2, 2);
      for (std::size_t j = 0; j < n; ++j) {
        p += lin(i, j) * Polynomial::variable(ctx, j);
      }
      out.push_back(std::move(p));
    }
    return out;
  }
}

} // namespace

// tau is an R-invariant: g and g o phi have the same Tjurina number.
TEST(Invariance, TauUnderRandomCoordinateChanges) {
  std::mt19937_64 rng(314);
  const auto ctx = vars({"x", "y"});
  const auto g = P("x^3 + y^6 + x^2*y^2", ctx);
  const auto tau = tjurina(g).dimension;
  ASSERT_EQ(tau, 10u);
  for (int i = 0; i < 20; ++i) {
    const auto phi = random_diffeo(rng, ctx);
    const auto h = compose(g, phi, ctx);
    EXPECT_EQ(tjurina(h).dimension, tau) << h.to_string();
  }
}
