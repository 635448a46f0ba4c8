#include "germforge/errors.hpp"
#include "germforge/report.hpp"

#include <gtest/gtest.h>

using namespace germforge;

namespace {

Report sample() {
  Report r;
  r.command = "augment";
  r.inputs["map"] = "y^2; y^5";
  r.inputs["g"] = "z^3";
  r.results["germ"] = "(y^2, y^5 + y*z^3, z)";
  r.results["codim"] = augmentation_codim_json(AugmentationCodim{4, false, 2, 2, 3, true});
  r.results["simplicity"] = verdict_json({SimplicityStatus::simple, Justification::catalog, "F_4"});
  r.results["basis"] = Json::array({"(0, y)", "(0, y^3)"});
  r.certification["f_order"] = 8;
  r.warnings.push_back("lower-bound-only");
  return r;
}

} // namespace

TEST(Report, JsonRoundTrip) {
  const auto r = sample();
  EXPECT_EQ(parse_report(emit_json(r)), r);
}

TEST(Report, DeterministicBytes) {
  EXPECT_EQ(emit_json(sample()), emit_json(sample()));
  EXPECT_EQ(emit_text(sample()), emit_text(sample()));
}

TEST(Report, SchemaField) {
  const auto j = Json::parse(emit_json(sample()));
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j.begin().key(), "schema");
  EXPECT_EQ(j["results"]["simplicity"]["justification"], "catalog:F_4");
  auto bad = j;
  bad["schema"] = 2;
  EXPECT_THROW(report_from_json(bad), precondition_error);
}

TEST(Report, TextRendering) {
  const auto text = emit_text(sample());
  EXPECT_NE(text.find("germ: (y^2, y^5 + y*z^3, z)\n"), std::string::npos);
  EXPECT_NE(text.find("  value: 4\n"), std::string::npos);
  EXPECT_NE(text.find("basis: [(0, y), (0, y^3)]\n"), std::string::npos);
  EXPECT_NE(text.find("warning: lower-bound-only\n"), std::string::npos);
}

TEST(Report, TableJson) {
  TableEntry e{1, "3_{P}", "(x,y,z,t^3+P(x,y,z)t)", "mu(P)", "", {}};
  TableInstance i;
  i.label = "3_A2";
  i.codim = AugmentationCodim{2, false, 1, 2, 2, true};
  i.formula_codim = 2;
  i.matches_catalog = true;
  e.instances.push_back(i);
  const auto j = table_json({e});
  EXPECT_EQ(j[0]["instances"][0]["codim_matches"], true);
  EXPECT_EQ(j[0]["instances"][0]["simplicity"]["status"], "Unknown");
}
