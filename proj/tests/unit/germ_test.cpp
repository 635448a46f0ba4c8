#include "support.hpp"

#include "germforge/ae_calculus.hpp"
#include "germforge/errors.hpp"
#include "germforge/germ_file.hpp"

#include <gtest/gtest.h>

using namespace germforge;
using namespace germforge::testing;

namespace {

Unfolding unfold(const MapGerm& f, const std::string& param, const std::string& components) {
  std::vector<std::pair<std::string, Role>> names;
  for (const auto& v : f.source()->names()) {
    names.emplace_back(v, Role::source);
  }
  names.emplace_back(param, Role::parameter);
  const auto ctx = VarContext::make(std::move(names));
  std::vector<Polynomial> comps;
  for (const auto& c : split_list(components)) {
    comps.push_back(P(c, ctx));
  }
  return Unfolding(f, {param}, std::move(comps));
}

} // namespace

TEST(MapGerm, ParsesSeparators) {
  EXPECT_EQ(germ("y^2; y^3").to_string(), "(y^2, y^3)");
  EXPECT_EQ(germ("(y^2, y^3)").to_string(), "(y^2, y^3)");
  EXPECT_EQ(parse_map_germ("x; t^3", std::vector<std::string>{"t", "x"}).source()->names(),
            (std::vector<std::string>{"t", "x"}));
}

TEST(MapGerm, RejectsComponentsNotVanishing) {
  EXPECT_THROW(germ("y^2 + 1; y^3"), precondition_error);
}

TEST(Unfolding, RecoversBase) {
  const auto f = germ("y^2; y^3");
  const auto F = unfold(f, "lam", "y^2; y^3 + lam*y");
  EXPECT_EQ(F.map().to_string(), "(y^2, y^3 + y*lam, lam)");
  EXPECT_THROW(unfold(f, "lam", "y^2 + y^3; y^3"), not_an_unfolding);
  EXPECT_THROW(unfold(f, "y", "y^2; y^3"), precondition_error);
}

TEST(Unfolding, InitialSpeed) {
  const auto F = unfold(germ("x; t^4 + x*t"), "lam", "x; t^4 + x*t + lam*t^2");
  const auto speed = initial_speed(F, 0);
  ASSERT_EQ(speed.size(), 2u);
  EXPECT_TRUE(speed[0].is_zero());
  EXPECT_EQ(speed[1].to_string(), "t^2");
}

TEST(Opsu, StableUnfoldingIsCertified) {
  const auto F = check_opsu(unfold(germ("y^2; y^3"), "lam", "y^2; y^3 + lam*y"));
  ASSERT_TRUE(F.certificate.jet_order);
  EXPECT_FALSE(F.certificate.user_asserted);
}

// (y^2, y^3, lam) is not even finitely determined; the jet lower bound is positive.
TEST(Opsu, TrivialUnfoldingIsNotStable) {
  EXPECT_THROW(check_opsu(unfold(germ("y^2; y^3"), "lam", "y^2; y^3")), not_stable);
  EXPECT_THROW(check_opsu(unfold(germ("y^2; y^5"), "lam", "y^2; y^5 + lam*y^3")), not_stable);
}

TEST(Opsu, AssertedSkipsCertification) {
  const auto F = assert_opsu(unfold(germ("y^2; y^3"), "lam", "y^2; y^3"));
  EXPECT_TRUE(F.certificate.user_asserted);
}

TEST(Augment, ComposesThroughTheParameter) {
  const auto f = germ("y^2; y^3");
  const auto F = check_opsu(unfold(f, "lam", "y^2; y^3 + lam*y"));
  const auto z = vars({"z"});
  EXPECT_EQ(augment(f, F, P("z^2", z)).to_string(), "(y^2, y^3 + y*z^2, z)");
  EXPECT_THROW(augment(f, F, P("z", z)), invalid_augmenting_function);
  EXPECT_THROW(augment(f, F, P("1 + z^2", z)), invalid_augmenting_function);
  EXPECT_THROW(augment(f, F, P("y^2", vars({"y"}))), context_mismatch);
}

TEST(Augment, RequiresUnfoldingOfF) {
  const auto F = check_opsu(unfold(germ("y^2; y^3"), "lam", "y^2; y^3 + lam*y"));
  EXPECT_THROW(augment(germ("y^2; y^5"), F, P("z^2", vars({"z"}))), not_an_unfolding);
}
