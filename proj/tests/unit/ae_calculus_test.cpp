#include "support.hpp"

#include "germforge/ae_calculus.hpp"
#include "germforge/errors.hpp"
#include "germforge/quasihomog.hpp"

#include <gtest/gtest.h>

using namespace germforge;
using namespace germforge::testing;

namespace {

std::size_t codim(const std::string& text, JetOptions options = {}) {
  return ae_codim(germ(text), default_ae_budget, options).codim;
}

} // namespace

// t^3: tf(d/dt) = 3t^2, wf(Y^b) = t^{3b}. The quotient of C{t} is spanned by t.
TEST(TangentImage, FoldAndCusp) {
  EXPECT_EQ(codim("t^2"), 0u);
  const auto r = ae_codim(germ("t^3"));
  EXPECT_EQ(r.codim, 1u);
  ASSERT_EQ(r.basis.size(), 1u);
  EXPECT_EQ(r.basis[0].to_string(), "(t)");
}

// (y^2, y^3): tf(y^a d/dy) = (2y^{a+1}, 3y^{a+2}); wf adds (Y1^i Y2^j) e_1, e_2.
// The only missing class is (0, y).
TEST(TangentImage, CuspCurve) {
  const auto r = ae_codim(germ("y^2; y^3"));
  EXPECT_EQ(r.codim, 1u);
  ASSERT_EQ(r.basis.size(), 1u);
  EXPECT_EQ(r.basis[0].to_string(), "(0, y)");
}

TEST(TangentImage, StableGerms) {
  EXPECT_EQ(codim("x; y^2; y^3 + x*y"), 0u);
  EXPECT_EQ(codim("x; t^3 + x*t"), 0u);
  EXPECT_EQ(codim("x; y; t^4 + x*t + y*t^2"), 0u);
}

TEST(AeCodim, PlaneCurves) {
  for (unsigned k = 1; k <= 3; ++k) {
    EXPECT_EQ(codim("y^2; y^" + std::to_string(2 * k + 1)), k);
  }
}

TEST(AeCodim, MondList) {
  EXPECT_EQ(codim("y^2; y^3 + z^2*y; z"), 1u);
  EXPECT_EQ(codim("y^2; y^3 + z^3*y; z"), 2u);
  EXPECT_EQ(codim("y^2; y^5 + z^2*y; z"), 2u);
  EXPECT_EQ(codim("y^2; y^5 + z^3*y; z"), 4u);
}

TEST(AeCodim, RiegerList) {
  EXPECT_EQ(codim("x; t^4 + x*t"), 1u);
  EXPECT_EQ(codim("x; t^3 + x^2*t"), 1u);
  EXPECT_EQ(codim("x; t^3 + x^3*t"), 2u);
  EXPECT_EQ(codim("x; t^4 + x^2*t + x*t^2"), 2u);
}

// Not weighted homogeneous: only the target filtration applies.
TEST(AeCodim, FiltrationOnNonQuasihomogeneous) {
  const auto f = germ("x; y; t^5 + x*t + y^2*t^2 + y*t^3");
  EXPECT_FALSE(find_map_weights(f.components()));
  const auto r = ae_codim(f);
  EXPECT_EQ(r.codim, 2u);
  EXPECT_EQ(r.method, "target-filtration");
}

// Without the grading the t^5 germ needs a larger jet order to close.
TEST(AeCodim, GradedAndFiltrationCertificatesAgree) {
  JetOptions plain;
  plain.use_grading = false;
  for (const auto* text : {"t^3", "y^2; y^5", "y^2; y^3 + z^3*y; z", "x; t^4 + x*t", "x; t^3 + x^3*t",
                           "x; y; t^5 + x*t + y*t^3"}) {
    const auto graded = ae_codim(germ(text));
    AeCodimResult filtered;
    ASSERT_NO_THROW(filtered = ae_codim(germ(text), 18, plain)) << text;
    EXPECT_EQ(graded.method, "weighted-degree") << text;
    EXPECT_EQ(filtered.method, "target-filtration") << text;
    EXPECT_EQ(graded.codim, filtered.codim) << text;
  }
}

TEST(AeCodim, NonFiniteGermIsNotCertified) {
  EXPECT_THROW(ae_codim(germ("x^2; x*y")), not_certified);
}

TEST(AeCodim, BudgetTooSmallIsNotCertified) {
  EXPECT_THROW(ae_codim(germ("y^2; y^7"), 4), not_certified);
}

TEST(JetModel, LowerBoundIsMonotone) {
  const auto f = germ("y^2; y^7");
  std::size_t previous = 0;
  for (unsigned k = 1; k <= 12; ++k) {
    const auto c = JetModel(f, k).codim();
    EXPECT_GE(c, previous);
    EXPECT_LE(c, 3u);
    previous = c;
  }
  EXPECT_EQ(previous, 3u);
}

TEST(JetModel, SerialParallelGradedUngradedAgree) {
  for (const auto* text : {"y^2; y^5 + z^3*y; z", "x; t^4 + x^2*t + x*t^2", "x; y; t^5 + x*t + y*t^2"}) {
    const auto f = germ(text);
    for (unsigned k = 2; k <= 7; ++k) {
      const JetModel ref(f, k, {Execution::serial, false});
      for (const JetOptions o : {JetOptions{Execution::parallel, false}, JetOptions{Execution::serial, true},
                                 JetOptions{Execution::parallel, true}}) {
        const JetModel m(f, k, o);
        ASSERT_EQ(m.image(), ref.image()) << text << " k=" << k;
        ASSERT_EQ(m.normal_basis(), ref.normal_basis()) << text << " k=" << k;
      }
    }
  }
}

TEST(JetModel, EncodeDecodeRoundTrip) {
  const JetModel m(germ("y^2; y^5"), 6);
  for (const auto& v : m.normal_basis()) {
    EXPECT_EQ(m.decode(m.encode(v)), v);
    EXPECT_FALSE(m.in_image(v));
  }
  EXPECT_EQ(m.quotient_rank(m.normal_basis()), m.codim());
}

TEST(Versal, MiniversalUnfoldingOfCusp) {
  const auto f = germ("y^2; y^5");
  const auto ctx = VarContext::make(std::vector<std::pair<std::string, Role>>{
      {"y", Role::source}, {"a", Role::parameter}, {"b", Role::parameter}});
  const Unfolding full(f, {"a", "b"}, {P("y^2", ctx), P("y^5 + a*y + b*y^3", ctx)});
  EXPECT_TRUE(is_versal(full));
  const Unfolding partial(f, {"a", "b"}, {P("y^2", ctx), P("y^5 + a*y + b*y^2", ctx)});
  EXPECT_FALSE(is_versal(partial));
}
