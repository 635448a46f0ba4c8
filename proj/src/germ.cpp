#include "germforge/germ.hpp"

#include "germforge/ae_calculus.hpp"
#include "germforge/errors.hpp"

#include <algorithm>

namespace germforge {

MapGerm::MapGerm(ContextPtr source, std::vector<Polynomial> components, std::string name)
    : source_(std::move(source)), components_(std::move(components)), name_(std::move(name)) {
  for (const auto& c : components_) {
    if (!(c.context() == *source_)) {
      throw context_mismatch("component " + c.to_string() + " lives in a different context");
    }
    if (!is_zero(c.constant_term())) {
      throw precondition_error("component " + c.to_string() + " does not vanish at the origin");
    }
  }
}

std::string MapGerm::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) {
      out += ", ";
    }
    out += components_[i].to_string();
  }
  return out + ")";
}

namespace {

// Accepts "a, b", "a; b" and "(a, b)".
std::vector<std::string> split_components(std::string_view text) {
  std::string body(text);
  const auto first = body.find_first_not_of(" \t");
  const auto last = body.find_last_not_of(" \t");
  if (first == std::string::npos) {
    throw syntax_error("empty map germ", 0);
  }
  body = body.substr(first, last - first + 1);
  if (body.front() == '(' && body.back() == ')') {
    int depth = 0;
    bool encloses = true;
    for (std::size_t i = 0; i + 1 < body.size(); ++i) {
      depth += body[i] == '(' ? 1 : body[i] == ')' ? -1 : 0;
      if (depth == 0) {
        encloses = false;
        break;
      }
    }
    if (encloses) {
      body = body.substr(1, body.size() - 2);
    }
  }
  std::vector<std::string> parts(1);
  for (char ch : body) {
    if (ch == ',' || ch == ';') {
      parts.emplace_back();
    } else {
      parts.back() += ch;
    }
  }
  for (const auto& part : parts) {
    if (part.find_first_not_of(" \t") == std::string::npos) {
      throw syntax_error("empty component in '" + std::string(text) + "'", 0);
    }
  }
  return parts;
}

} // namespace

MapGerm parse_map_germ(std::string_view text, std::optional<std::vector<std::string>> vars, std::string name) {
  const auto parts = split_components(text);
  std::vector<std::string> names;
  if (vars) {
    names = *vars;
  } else {
    for (const auto& part : parts) {
      for (auto& v : variables_in(part)) {
        if (std::find(names.begin(), names.end(), v) == names.end()) {
          names.push_back(std::move(v));
        }
      }
    }
  }
  if (names.empty()) {
    throw precondition_error("map germ needs at least one source variable");
  }
  const auto ctx = VarContext::make(names);
  std::vector<Polynomial> comps;
  for (const auto& part : parts) {
    comps.push_back(parse_poly(part, ctx));
  }
  return MapGerm(ctx, std::move(comps), std::move(name));
}

Unfolding::Unfolding(MapGerm base, std::vector<std::string> params, std::vector<Polynomial> deformation)
    : base_(std::move(base)), params_(std::move(params)), map_(base_) {
  if (params_.empty()) {
    throw not_an_unfolding("an unfolding needs at least one parameter");
  }
  if (deformation.size() != base_.p()) {
    throw not_an_unfolding("deformation has " + std::to_string(deformation.size()) + " components, base has " +
                           std::to_string(base_.p()));
  }
  std::vector<std::pair<std::string, Role>> vars;
  for (const auto& name : base_.source()->names()) {
    vars.emplace_back(name, Role::source);
  }
  for (const auto& name : params_) {
    if (base_.source()->index_of(name) ||
        std::count(params_.begin(), params_.end(), name) > 1) {
      throw context_mismatch("parameter name '" + name + "' is already in use");
    }
    vars.emplace_back(name, Role::parameter);
  }
  const auto ctx = VarContext::make(std::move(vars));

  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < base_.n(); ++i) {
    images.push_back(Polynomial::variable(base_.source(), i));
  }
  for (std::size_t s = 0; s < params_.size(); ++s) {
    images.emplace_back(base_.source());
  }
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < deformation.size(); ++i) {
    auto c = deformation[i].embed(ctx);
    if (!(compose(c, images, base_.source()) == base_.component(i))) {
      throw not_an_unfolding("setting the parameters to 0 does not recover component " + std::to_string(i + 1) +
                             " of the base");
    }
    comps.push_back(std::move(c));
  }
  for (std::size_t s = 0; s < params_.size(); ++s) {
    comps.push_back(Polynomial::variable(ctx, base_.n() + s));
  }
  map_ = MapGerm(ctx, std::move(comps), base_.name().empty() ? std::string{} : base_.name() + "-unfolding");
}

std::vector<Polynomial> Unfolding::deformation() const {
  const auto& all = map_.components();
  return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(base_.p())};
}

Opsu check_opsu(const Unfolding& unfolding, int k_budget) {
  if (unfolding.m() != 1) {
    throw precondition_error("a one-parameter unfolding is required");
  }
  const auto& F = unfolding.map();
  const int probe = std::min<int>(k_budget, static_cast<int>(F.p()) + 1);
  for (int k = 1; k <= probe; ++k) {
    if (const auto lower = JetModel(F, static_cast<unsigned>(k)).codim(); lower > 0) {
      throw not_stable("unfolding has positive A_e-codimension", lower);
    }
  }
  const auto r = ae_codim(F, k_budget);
  if (r.codim > 0) {
    throw not_stable("unfolding has positive A_e-codimension", r.codim);
  }
  return Opsu{unfolding, StabilityCertificate{r.certified_order, false}};
}

Opsu assert_opsu(const Unfolding& unfolding) {
  if (unfolding.m() != 1) {
    throw precondition_error("a one-parameter unfolding is required");
  }
  return Opsu{unfolding, StabilityCertificate{std::nullopt, true}};
}

MapGerm augment(const MapGerm& f, const Opsu& opsu, const Polynomial& g) {
  const auto& base = opsu.unfolding.base();
  if (!(base == f)) {
    throw not_an_unfolding("the stable unfolding is not an unfolding of " + f.to_string());
  }
  if (!is_zero(g.constant_term())) {
    throw invalid_augmenting_function("augmenting function must vanish at 0");
  }
  if (!jet_truncate(g, 1).is_zero()) {
    throw invalid_augmenting_function("augmenting function must be singular at 0");
  }
  std::vector<std::pair<std::string, Role>> vars;
  for (const auto& name : f.source()->names()) {
    vars.emplace_back(name, Role::source);
  }
  for (const auto& name : g.context().names()) {
    if (f.source()->index_of(name) || name == opsu.param()) {
      throw context_mismatch("augmenting variable '" + name + "' clashes with the germ or parameter");
    }
    vars.emplace_back(name, Role::augmenting);
  }
  const auto ctx = VarContext::make(std::move(vars));

  const auto& big = opsu.unfolding.map();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < f.n(); ++i) {
    images.push_back(Polynomial::variable(ctx, i));
  }
  images.push_back(g.embed(ctx));
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < f.p(); ++i) {
    comps.push_back(compose(big.component(i), images, ctx));
  }
  for (std::size_t j = 0; j < g.context().size(); ++j) {
    comps.push_back(Polynomial::variable(ctx, f.n() + j));
  }
  return MapGerm(ctx, std::move(comps));
}

std::vector<Polynomial> initial_speed(const Unfolding& unfolding, std::size_t param_index) {
  if (param_index >= unfolding.m()) {
    throw precondition_error("no parameter with index " + std::to_string(param_index));
  }
  const auto& base = unfolding.base();
  const auto& big = unfolding.map();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < base.n(); ++i) {
    images.push_back(Polynomial::variable(base.source(), i));
  }
  for (std::size_t s = 0; s < unfolding.m(); ++s) {
    images.emplace_back(base.source());
  }
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < base.p(); ++i) {
    out.push_back(compose(derivative(big.component(i), base.n() + param_index), images, base.source()));
  }
  return out;
}

} // namespace germforge
