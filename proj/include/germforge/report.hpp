#pragma once

// CLI reports. JSON layout (schema 1):
//   { "schema": 1, "command": "...", "inputs": {...}, "results": {...},
//     "certification": {...}, "warnings": [...] }

#include "germforge/ae_calculus.hpp"
#include "germforge/augmentation.hpp"
#include "germforge/simplicity.hpp"
#include "germforge/table44.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace germforge {

using Json = nlohmann::ordered_json;

inline constexpr int report_schema = 1;

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json certification = Json::object();
  std::vector<std::string> warnings;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Report& r);
Report report_from_json(const Json& j);

std::string emit_json(const Report& r);
Report parse_report(std::string_view text);
/// "key: value" lines; nested objects are indented.
std::string emit_text(const Report& r);

Json monomials_json(const std::vector<Monomial>& basis, const VarContext& ctx);
Json fields_json(const std::vector<VectorFieldAlongF>& fields);
Json verdict_json(const SimplicityVerdict& v);
Json augmentation_codim_json(const AugmentationCodim& c);
Json table_json(const std::vector<TableEntry>& table);

} // namespace germforge
