#include "germforge/report.hpp"

#include "germforge/errors.hpp"

namespace germforge {

Json to_json(const Report& r) {
  Json j;
  j["schema"] = report_schema;
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["results"] = r.results;
  j["certification"] = r.certification;
  j["warnings"] = r.warnings;
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", 0) != report_schema) {
    throw precondition_error("not a schema " + std::to_string(report_schema) + " report");
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  r.certification = j.at("certification");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(std::string_view text) { return report_from_json(Json::parse(text)); }

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) {
    return v.get<std::string>();
  }
  if (v.is_null()) {
    return "unknown";
  }
  return v.dump();
}

bool is_flat_array(const Json& v) {
  if (!v.is_array()) {
    return false;
  }
  for (const auto& e : v) {
    if (e.is_structured()) {
      return false;
    }
  }
  return true;
}

void emit_value(std::string& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (v.is_object()) {
    out += pad + key + ":\n";
    for (const auto& [k, e] : v.items()) {
      emit_value(out, k, e, indent + 1);
    }
  } else if (is_flat_array(v)) {
    std::string line;
    for (const auto& e : v) {
      line += (line.empty() ? "" : ", ") + scalar_text(e);
    }
    out += pad + key + ": [" + line + "]\n";
  } else if (v.is_array()) {
    out += pad + key + ":\n";
    std::size_t i = 0;
    for (const auto& e : v) {
      emit_value(out, "- " + std::to_string(i++), e, indent + 1);
    }
  } else {
    out += pad + key + ": " + scalar_text(v) + "\n";
  }
}

} // namespace

std::string emit_text(const Report& r) {
  std::string out;
  for (const auto& [k, v] : r.results.items()) {
    emit_value(out, k, v, 0);
  }
  if (!r.certification.empty()) {
    emit_value(out, "certification", r.certification, 0);
  }
  for (const auto& w : r.warnings) {
    out += "warning: " + w + "\n";
  }
  return out;
}

Json monomials_json(const std::vector<Monomial>& basis, const VarContext& ctx) {
  Json a = Json::array();
  for (const auto& m : basis) {
    a.push_back(to_string(m, ctx));
  }
  return a;
}

Json fields_json(const std::vector<VectorFieldAlongF>& fields) {
  Json a = Json::array();
  for (const auto& f : fields) {
    a.push_back(f.to_string());
  }
  return a;
}

Json verdict_json(const SimplicityVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["justification"] = v.justification_tag();
  return j;
}

Json augmentation_codim_json(const AugmentationCodim& c) {
  Json j;
  j["value"] = c.value;
  j["lower_bound_only"] = c.lower_bound_only;
  j["f_codim"] = c.f_codim;
  j["tau"] = c.tau;
  j["quasihomogeneous"] = c.quasihomogeneous;
  return j;
}

Json table_json(const std::vector<TableEntry>& table) {
  Json rows = Json::array();
  for (const auto& e : table) {
    Json row;
    row["row"] = e.row;
    row["type"] = e.tag;
    row["normal_form"] = e.normal_form;
    row["codim"] = e.codim_expr;
    row["constraints"] = e.constraints;
    Json inst = Json::array();
    for (const auto& i : e.instances) {
      Json ij;
      ij["label"] = i.label;
      ij["germ"] = i.germ;
      ij["base"] = i.base;
      ij["g"] = i.g;
      ij["f_codim"] = i.f_codim;
      ij["f_order"] = i.f_order;
      ij["codim"] = i.codim.value;
      ij["tau"] = i.codim.tau;
      ij["formula_codim"] = i.formula_codim;
      ij["codim_matches"] = i.codim_matches();
      ij["matches_catalog"] = i.matches_catalog;
      ij["simplicity"] = verdict_json(i.verdict);
      inst.push_back(std::move(ij));
    }
    row["instances"] = std::move(inst);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace germforge
