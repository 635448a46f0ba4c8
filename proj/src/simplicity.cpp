#include "germforge/simplicity.hpp"

#include "germforge/ade.hpp"
#include "germforge/errors.hpp"

namespace germforge {

std::string to_string(SimplicityStatus s) {
  switch (s) {
  case SimplicityStatus::simple:
    return "Simple";
  case SimplicityStatus::non_simple:
    return "NonSimple";
  case SimplicityStatus::unknown:
    break;
  }
  return "Unknown";
}

std::string to_string(Tri t) {
  switch (t) {
  case Tri::yes:
    return "yes";
  case Tri::no:
    return "no";
  case Tri::unknown:
    break;
  }
  return "unknown";
}

Tri parse_tri(std::string_view text) {
  if (text == "yes" || text == "true") {
    return Tri::yes;
  }
  if (text == "no" || text == "false") {
    return Tri::no;
  }
  if (text == "unknown") {
    return Tri::unknown;
  }
  throw precondition_error("expected yes, no or unknown, got '" + std::string(text) + "'");
}

std::string SimplicityVerdict::justification_tag() const {
  switch (justification) {
  case Justification::nonsimple_augmenting_function:
    return "nonsimple-augmenting-function";
  case Justification::codim1_augmented_map:
    return "codim1-augmented-map";
  case Justification::morse_augmenting_function:
    return "morse-augmenting-function";
  case Justification::catalog:
    return "catalog:" + catalog_entry;
  case Justification::none:
    break;
  }
  return "none";
}

SimplicityVerdict decide_simplicity(std::size_t f_codim, Tri f_simple, const Polynomial& g, int k_max) {
  const auto type = classify_function(g, k_max);
  if (type.kind == FunctionKind::not_isolated) {
    throw precondition_error("augmenting function has a non-isolated singularity");
  }
  if (!type.is_simple()) {
    return {SimplicityStatus::non_simple, Justification::nonsimple_augmenting_function, {}};
  }
  if (f_codim == 1) {
    return {SimplicityStatus::simple, Justification::codim1_augmented_map, {}};
  }
  if (is_morse(g)) {
    switch (f_simple) {
    case Tri::yes:
      return {SimplicityStatus::simple, Justification::morse_augmenting_function, {}};
    case Tri::no:
      return {SimplicityStatus::non_simple, Justification::morse_augmenting_function, {}};
    case Tri::unknown:
      break;
    }
  }
  return {};
}

std::optional<SimplicityVerdict> catalog_verdict(const MapGerm& germ, const Catalog& catalog) {
  const auto hit = catalog.lookup(germ);
  if (!hit) {
    return std::nullopt;
  }
  return SimplicityVerdict{hit->entry->simple ? SimplicityStatus::simple : SimplicityStatus::non_simple,
                           Justification::catalog, hit->label};
}

bool contradicts(const SimplicityVerdict& a, const SimplicityVerdict& b) {
  return a.status != SimplicityStatus::unknown && b.status != SimplicityStatus::unknown && a.status != b.status;
}

ResolvedVerdict resolve_simplicity(std::size_t f_codim, Tri f_simple, const Polynomial& g, const MapGerm& augmented,
                                   const Catalog& catalog, int k_max) {
  ResolvedVerdict r;
  r.computed = decide_simplicity(f_codim, f_simple, g, k_max);
  r.catalog = catalog_verdict(augmented, catalog);
  r.verdict = r.computed;
  if (r.catalog) {
    r.contradiction = contradicts(r.computed, *r.catalog);
    if (r.computed.status == SimplicityStatus::unknown) {
      r.verdict = *r.catalog;
    }
  }
  return r;
}

std::optional<int> modality_of_augmentation(std::size_t f_codim, const Polynomial& g, bool mu_constant_qh,
                                            int k_max) {
  if (f_codim != 1 || !mu_constant_qh) {
    return std::nullopt;
  }
  return modality_of_function(g, k_max);
}

} // namespace germforge
