#include "support.hpp"

#include "germforge/ade.hpp"
#include "germforge/errors.hpp"

#include <gtest/gtest.h>

using namespace germforge;
using namespace germforge::testing;

TEST(Classify, NormalForms) {
  const auto ctx = vars({"x", "y", "z"});
  for (const auto* label : {"A1", "A2", "A5", "D4", "D5", "D7", "E6", "E7", "E8"}) {
    EXPECT_EQ(classify_function(ade_normal_form(label, ctx)).tag(), label);
  }
}

TEST(Classify, DisguisedRepresentatives) {
  const auto ctx = vars({"x", "y"});
  EXPECT_EQ(classify_function(P("x*y + x^5", ctx)).tag(), "A1");
  EXPECT_EQ(classify_function(P("(x + y)^2 + y^4", ctx)).tag(), "A3");
  EXPECT_EQ(classify_function(P("x^2*y + y^3 + x^4", ctx)).tag(), "D4");
  EXPECT_EQ(classify_function(P("x^2*y + y^5", ctx)).tag(), "D6");
  EXPECT_EQ(classify_function(P("x^3 + x*y^3", ctx)).tag(), "E7");
}

TEST(Classify, UnimodalWitnesses) {
  const auto c3 = vars({"x", "y", "z"});
  const auto c2 = vars({"x", "y"});
  const auto p8 = classify_function(P("x^3 + y^3 + z^3 + x*y*z", c3));
  EXPECT_EQ(p8.witness, Witness::P8);
  EXPECT_FALSE(p8.is_simple());
  EXPECT_EQ(classify_function(P("x^4 + y^4", c2)).witness, Witness::X9);
  EXPECT_EQ(classify_function(P("x^3 + y^6 + x^2*y^2", c2)).witness, Witness::J10plus);
}

TEST(Classify, NonIsolated) {
  const auto ctx = vars({"x", "y"});
  EXPECT_EQ(classify_function(P("x^2*y^2", ctx), 10).kind, FunctionKind::not_isolated);
}

TEST(Classify, RejectsNonSingular) {
  const auto ctx = vars({"x", "y"});
  EXPECT_THROW(classify_function(P("x + y^2", ctx)), non_singular_germ);
}

TEST(BinaryCubic, RootStructure) {
  EXPECT_EQ(classify_binary_cubic(1, 0, 0, 1), CubicRoots::distinct);     // x^3 + y^3
  EXPECT_EQ(classify_binary_cubic(0, 1, 0, 0), CubicRoots::double_root);  // x^2 y
  EXPECT_EQ(classify_binary_cubic(1, 0, 0, 0), CubicRoots::triple_root);  // x^3
  EXPECT_EQ(classify_binary_cubic(1, 3, 3, 1), CubicRoots::triple_root);  // (x + y)^3
}

TEST(Modality, SimpleAndUnimodal) {
  const auto c2 = vars({"x", "y"});
  const auto c3 = vars({"x", "y", "z"});
  EXPECT_EQ(modality_of_function(P("x^4 + y^3", c2)), 0);
  EXPECT_EQ(modality_of_function(P("x^3 + y^6 + x^2*y^2", c2)), 1);
  EXPECT_EQ(modality_of_function(unimodal_family(Witness::X9, Rat(1), c2)), 1);
  EXPECT_EQ(modality_of_function(unimodal_family(Witness::P8, Rat(1), c3)), 1);
  EXPECT_FALSE(modality_of_function(P("x^4 + y^4 + z^4", c3)).has_value());
}

TEST(Modality, FamilyExceptionalSet) {
  const auto c2 = vars({"x", "y"});
  EXPECT_THROW(unimodal_family(Witness::X9, Rat(2), c2), precondition_error);
  EXPECT_THROW(unimodal_family(Witness::P8, Rat(-3), vars({"x", "y", "z"})), precondition_error);
}
