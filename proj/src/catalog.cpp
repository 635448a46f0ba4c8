#include "germforge/catalog.hpp"

#include "germforge/ade.hpp"
#include "germforge/errors.hpp"
#include "germforge/template.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <regex>

namespace germforge {

std::vector<std::string> simple_function_labels(std::size_t max_mu) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= max_mu; ++k) {
    out.push_back("A" + std::to_string(k));
  }
  for (std::size_t k = 4; k <= max_mu; ++k) {
    out.push_back("D" + std::to_string(k));
  }
  for (std::size_t k = 6; k <= std::min<std::size_t>(max_mu, 8); ++k) {
    out.push_back("E" + std::to_string(k));
  }
  return out;
}

namespace {

std::optional<long> parse_family(const std::string& text, long line) {
  static const std::regex pattern(R"(\s*k\s*>=\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw germ_file_error("family must read 'k >= N'", static_cast<std::size_t>(line));
  }
  return std::stol(m[1]);
}

CatalogEntry parse_entry(const GermSection& s) {
  CatalogEntry e;
  e.id = s.name;
  e.label = s.get("label") ? *s.get("label") : s.name;
  e.source = s.get("source") ? *s.get("source") : "";
  e.vars = split_list(s.require("vars"));
  e.components = s.require("components");
  e.codim = s.require("codim");
  e.simple = parse_bool(s.require("simple"));
  if (const auto* v = s.get("family")) {
    e.family_min = parse_family(*v, static_cast<long>(s.line));
  }
  if (const auto* v = s.get("augment_from")) {
    e.augment_from = std::stol(*v);
  }
  if (const auto* v = s.get("slot")) {
    const auto colon = v->find(':');
    if (colon == std::string::npos) {
      throw germ_file_error("slot must read 'NAME: vars'", s.line);
    }
    FunctionSlot slot;
    slot.name = v->substr(0, colon);
    slot.name.erase(std::remove(slot.name.begin(), slot.name.end(), ' '), slot.name.end());
    slot.vars = split_list(v->substr(colon + 1));
    e.slot = std::move(slot);
  }
  if (const auto* v = s.get("opsu")) {
    e.opsu = *v;
  }
  if (const auto* v = s.get("param")) {
    e.param = *v;
  }
  if (const auto* v = s.get("base")) {
    e.base = *v;
  }
  if (const auto* v = s.get("base_k")) {
    e.base_k = *v;
  }
  if (const auto* v = s.get("augment")) {
    e.augment = *v;
  }
  if (const auto* v = s.get("augment_vars")) {
    e.augment_vars = split_list(*v);
  } else if (e.slot) {
    e.augment_vars = e.slot->vars;
  }
  if (const auto* v = s.get("table")) {
    e.table_row = std::stoi(*v);
  }
  if (const auto* v = s.get("table_form")) {
    e.table_form = *v;
  }
  if (const auto* v = s.get("constraints")) {
    e.constraints = *v;
  }
  if (e.augment && !e.base) {
    throw germ_file_error("[catalog " + e.id + "] has 'augment' without 'base'", s.line);
  }
  return e;
}

} // namespace

Catalog::Catalog(const GermFile& file) {
  for (const auto* s : file.of_kind("catalog")) {
    entries_.push_back(parse_entry(*s));
  }
  for (const auto& e : entries_) {
    if (e.base && !find(*e.base)) {
      throw germ_file_error("[catalog " + e.id + "] names unknown base '" + *e.base + "'", 0);
    }
  }
}

const CatalogEntry* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) {
      return &e;
    }
  }
  return nullptr;
}

const CatalogEntry& Catalog::require(std::string_view id) const {
  if (const auto* e = find(id)) {
    return *e;
  }
  throw precondition_error("no catalog entry '" + std::string(id) + "'");
}

Polynomial Catalog::slot_function(const CatalogEntry& e, const std::string& label) const {
  if (!e.slot) {
    throw precondition_error("catalog entry '" + e.id + "' has no function slot");
  }
  return ade_normal_form(label, VarContext::make(e.slot->vars));
}

namespace {

TemplateBindings bindings_for(const CatalogEntry& e, std::optional<long> k,
                              const std::optional<std::string>& slot_text) {
  TemplateBindings b;
  if (k) {
    b.integers["k"] = *k;
  }
  if (e.slot && slot_text) {
    b.texts[e.slot->name] = *slot_text;
  }
  return b;
}

} // namespace

CatalogInstance Catalog::instantiate(const CatalogEntry& e, std::optional<long> k,
                                     std::optional<std::string> slot_label) const {
  if (e.family_min.has_value() != k.has_value()) {
    throw precondition_error("catalog entry '" + e.id + (k ? "' is not a family" : "' needs a family index"));
  }
  if (k && *k < *e.family_min) {
    throw precondition_error(e.id + " needs k >= " + std::to_string(*e.family_min));
  }
  if (e.slot.has_value() != slot_label.has_value()) {
    throw precondition_error("catalog entry '" + e.id + (slot_label ? "' has no slot" : "' needs a slot function"));
  }
  std::optional<std::string> slot_text;
  if (slot_label) {
    slot_text = "(" + slot_function(e, *slot_label).to_string() + ")";
  }
  const auto comps = expand_template(e.components, bindings_for(e, k, slot_text));
  auto label_bindings = bindings_for(e, k, slot_label);
  CatalogInstance inst{&e, k, slot_label, expand_template(e.label, label_bindings),
                       parse_map_germ(comps, e.vars)};
  inst.germ.set_name(inst.label);
  return inst;
}

std::vector<CatalogInstance> Catalog::instances(const CatalogEntry& e, long max_k) const {
  std::vector<std::optional<long>> ks;
  if (e.family_min) {
    for (long k = *e.family_min; k <= max_k; ++k) {
      ks.emplace_back(k);
    }
  } else {
    ks.emplace_back(std::nullopt);
  }
  std::vector<std::optional<std::string>> slots;
  if (e.slot) {
    for (auto& l : simple_function_labels()) {
      slots.emplace_back(l);
    }
  } else {
    slots.emplace_back(std::nullopt);
  }
  std::vector<CatalogInstance> out;
  for (const auto& k : ks) {
    for (const auto& s : slots) {
      out.push_back(instantiate(e, k, s));
    }
  }
  return out;
}

std::size_t Catalog::stored_codim(const CatalogInstance& inst) const {
  const auto& e = *inst.entry;
  std::string formula = e.codim;
  static const std::regex mu_call(R"(mu\(\s*([A-Za-z_][A-Za-z0-9_]*)\s*\))");
  std::smatch m;
  while (std::regex_search(formula, m, mu_call)) {
    if (!e.slot || m[1] != e.slot->name || !inst.slot_label) {
      throw precondition_error("codim formula of '" + e.id + "' refers to an unknown slot");
    }
    const auto mu = milnor(slot_function(e, *inst.slot_label)).dimension;
    formula = m.prefix().str() + std::to_string(mu) + m.suffix().str();
  }
  std::map<std::string, long> ints;
  if (inst.k) {
    ints["k"] = *inst.k;
  }
  const long value = eval_int_expr(formula, ints);
  if (value < 0) {
    throw precondition_error("negative codimension for " + inst.label);
  }
  return static_cast<std::size_t>(value);
}

std::optional<Unfolding> Catalog::opsu(const CatalogInstance& inst) const {
  const auto& e = *inst.entry;
  if (!e.opsu) {
    return std::nullopt;
  }
  const auto text = expand_template(*e.opsu, bindings_for(e, inst.k, std::nullopt));
  std::vector<std::pair<std::string, Role>> vars;
  for (const auto& v : e.vars) {
    vars.emplace_back(v, Role::source);
  }
  vars.emplace_back(e.param, Role::parameter);
  const auto ctx = VarContext::make(std::move(vars));
  std::vector<Polynomial> deformation;
  for (const auto& c : split_list(text)) {
    deformation.push_back(parse_poly(c, ctx));
  }
  return Unfolding(inst.germ, {e.param}, std::move(deformation));
}

std::optional<Catalog::Augmentation> Catalog::augmentation_of(const CatalogInstance& inst) const {
  const auto& e = *inst.entry;
  if (!e.base || !e.augment) {
    return std::nullopt;
  }
  const auto& base = require(*e.base);
  std::optional<long> base_k;
  if (base.family_min) {
    std::map<std::string, long> ints;
    if (inst.k) {
      ints["k"] = *inst.k;
    }
    base_k = eval_int_expr(e.base_k, ints);
  }
  std::optional<std::string> slot_text;
  if (inst.slot_label) {
    slot_text = "(" + slot_function(e, *inst.slot_label).to_string() + ")";
  }
  const auto g_text = expand_template(*e.augment, bindings_for(e, inst.k, slot_text));
  auto g = parse_poly(g_text, VarContext::make(e.augment_vars, Role::augmenting));
  return Augmentation{instantiate(base, base_k), std::move(g)};
}

namespace {

std::vector<std::string> sorted_strings(const std::vector<Polynomial>& comps) {
  std::vector<std::string> out;
  for (const auto& c : comps) {
    out.push_back(c.to_string());
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

const std::vector<Catalog::Prepared>& Catalog::prepared() const {
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  if (!prepared_) {
    auto list = std::make_shared<std::vector<Prepared>>();
    for (const auto& e : entries_) {
      for (auto& inst : instances(e, lookup_max_k)) {
        auto sorted = sorted_strings(inst.germ.components());
        list->push_back({std::move(inst), std::move(sorted)});
      }
    }
    prepared_ = std::move(list);
  }
  return *prepared_;
}

std::optional<CatalogInstance> Catalog::lookup(const MapGerm& germ) const {
  const auto n = germ.n();
  for (const auto& prep : prepared()) {
    const auto& target = prep.instance.germ;
    if (target.n() != n || target.p() != germ.p()) {
      continue;
    }
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<Polynomial> images;
      for (std::size_t i = 0; i < n; ++i) {
        images.push_back(Polynomial::variable(target.source(), perm[i]));
      }
      std::vector<Polynomial> renamed;
      for (const auto& c : germ.components()) {
        renamed.push_back(compose(c, images, target.source()));
      }
      if (sorted_strings(renamed) == prep.sorted_components) {
        return prep.instance;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return std::nullopt;
}

const Catalog& builtin_catalog() {
  static const Catalog catalog(parse_germ_file(builtin_catalog_text()));
  return catalog;
}

} // namespace germforge
