#include "support.hpp"

#include "germforge/errors.hpp"
#include "germforge/germ_file.hpp"
#include "germforge/template.hpp"

#include <gtest/gtest.h>

using namespace germforge;
using namespace germforge::testing;

namespace {

const char* library_text = R"(# cusp and friends
[function g]
vars = z
expr = z^3

[function h]
expr = {g} + z^4   # nested reference

[germ cusp]
components = y^2; y^3

[unfolding cusp_opsu]
base = cusp
params = lam
components = y^2; y^3 + lam*y
stable = check
substantial = true

[unfolding cusp_bad]
base = cusp
params = lam
components = y^2; y^3
stable = check
)";

} // namespace

TEST(GermFile, ParsesSections) {
  const auto file = parse_germ_file(library_text);
  ASSERT_EQ(file.sections.size(), 5u);
  EXPECT_EQ(file.of_kind("unfolding").size(), 2u);
  const auto* g = file.find("function", "g");
  ASSERT_NE(g, nullptr);
  EXPECT_EQ(*g->get("expr"), "z^3");
  EXPECT_EQ(g->line, 2u);
}

TEST(GermFile, RoundTrips) {
  const auto file = parse_germ_file(library_text);
  const auto text = write_germ_file(file);
  EXPECT_EQ(parse_germ_file(text), file);
  EXPECT_EQ(write_germ_file(parse_germ_file(text)), text);
}

TEST(GermFile, ErrorsCarryLineNumbers) {
  try {
    parse_germ_file("[germ a]\ncomponents = x\n[germ a]\n");
    FAIL();
  } catch (const germ_file_error& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse_germ_file("components = x\n"), germ_file_error);
  EXPECT_THROW(parse_germ_file("[widget a]\n"), germ_file_error);
  EXPECT_THROW(parse_germ_file("[germ a]\njunk\n"), germ_file_error);
  EXPECT_THROW(parse_germ_file("[germ a]\nx = 1\nx = 2\n"), germ_file_error);
}

TEST(GermLibrary, ResolvesReferences) {
  const GermLibrary lib(parse_germ_file(library_text));
  EXPECT_EQ(lib.function_text("h"), "(z^3) + z^4");
  EXPECT_EQ(lib.function("h").to_string(), "z^4 + z^3");
  EXPECT_EQ(lib.germ("cusp").to_string(), "(y^2, y^3)");
  EXPECT_EQ(lib.unfolding("cusp_opsu").m(), 1u);
  EXPECT_TRUE(lib.substantial("cusp_opsu").asserted);
  EXPECT_NO_THROW(lib.opsu("cusp_opsu"));
  EXPECT_THROW(lib.opsu("cusp_bad"), not_stable);
  EXPECT_THROW(lib.germ("missing"), germ_file_error);
}

TEST(GermLibrary, DetectsCycles) {
  const GermLibrary lib(parse_germ_file("[function a]\nexpr = {b} + x\n[function b]\nexpr = {a} * x\n"));
  EXPECT_THROW(lib.function("a"), germ_file_error);
}

TEST(GermLibrary, AssertedStability) {
  const GermLibrary lib(parse_germ_file(
      "[germ c]\ncomponents = y^2; y^3\n[unfolding u]\nbase = c\nparams = l\ncomponents = y^2; y^3\nstable = asserted\n"));
  EXPECT_TRUE(lib.opsu("u").certificate.user_asserted);
}

TEST(SplitList, SemicolonsWin) {
  EXPECT_EQ(split_list("a; b, c"), (std::vector<std::string>{"a", "b, c"}));
  EXPECT_EQ(split_list(" x , y "), (std::vector<std::string>{"x", "y"}));
}

TEST(Template, ExpandsIntegersAndTexts) {
  TemplateBindings b;
  b.integers["k"] = 3;
  b.texts["P"] = "(x^2 + y^2)";
  EXPECT_EQ(expand_template("y^{2*k+1} + {P}*t", b), "y^7 + (x^2 + y^2)*t");
  EXPECT_EQ(eval_int_expr("k-1", b.integers), 2);
  EXPECT_THROW(expand_template("{m}", b), precondition_error);
  EXPECT_THROW(expand_template("{k", b), syntax_error);
  EXPECT_THROW(eval_int_expr("k/2", b.integers), syntax_error);
}
