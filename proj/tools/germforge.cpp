#include "germforge/ade.hpp"
#include "germforge/ae_calculus.hpp"
#include "germforge/augmentation.hpp"
#include "germforge/catalog.hpp"
#include "germforge/errors.hpp"
#include "germforge/germ_file.hpp"
#include "germforge/local_algebra.hpp"
#include "germforge/quasihomog.hpp"
#include "germforge/report.hpp"
#include "germforge/simplicity.hpp"
#include "germforge/table44.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>

using namespace germforge;

namespace {

struct Options {
  std::string expr;
  std::string g;
  std::string map;
  std::string vars;
  std::string opsu;
  std::string param = "lam";
  std::optional<std::size_t> f_codim;
  std::string f_simple;
  bool substantial = false;
  bool mu_constant_qh = false;
  bool allow_lower_bound = false;
  std::string family;
  std::string lambda = "0";
  std::string germ_file;
  std::string germ;
  std::string function;
  std::vector<long> ks = {2, 3, 4};
  std::string catalog_action = "list";
  std::optional<int> jet_order;
  bool json = false;
};

class Session {
public:
  Session(const Options& o, std::string command) : o_(o) {
    report.command = std::move(command);
    if (!o.germ_file.empty()) {
      library_.emplace(load_germ_file(o.germ_file));
      report.inputs["germ_file"] = o.germ_file;
    }
  }

  int ae_budget() const { return o_.jet_order.value_or(env_budget().value_or(default_ae_budget)); }
  int quotient_budget() const { return o_.jet_order.value_or(env_budget().value_or(default_quotient_order)); }

  std::optional<std::vector<std::string>> vars() const {
    if (o_.vars.empty()) {
      return std::nullopt;
    }
    return split_list(o_.vars);
  }

  Polynomial function(const std::string& text, const char* key) {
    if (library_ && !o_.function.empty() && text.empty()) {
      report.inputs[key] = "{" + o_.function + "}";
      return library_->function(o_.function);
    }
    if (text.empty()) {
      throw precondition_error(std::string("missing ") + (std::string(key) == "g" ? "-g" : "-e"));
    }
    report.inputs[key] = text;
    const auto expanded = library_ ? library_->expand(text) : text;
    auto names = std::string(key) == "expr" && vars() ? *vars() : variables_in(expanded);
    if (names.empty()) {
      throw precondition_error("expression has no variables");
    }
    return parse_poly(expanded, VarContext::make(std::move(names)));
  }

  MapGerm germ() {
    if (library_ && !o_.germ.empty()) {
      report.inputs["germ"] = o_.germ;
      return library_->germ(o_.germ);
    }
    if (o_.map.empty()) {
      throw precondition_error("missing -m (or --germ with --germ-file)");
    }
    report.inputs["map"] = o_.map;
    return parse_map_germ(library_ ? library_->expand(o_.map) : o_.map, vars());
  }

  Opsu opsu(const MapGerm& f) {
    if (library_ && library_->file().find("unfolding", o_.opsu)) {
      report.inputs["opsu"] = o_.opsu;
      auto F = library_->opsu(o_.opsu, ae_budget());
      if (!(F.unfolding.base() == f)) {
        throw not_an_unfolding("unfolding '" + o_.opsu + "' is not an unfolding of " + f.to_string());
      }
      return F;
    }
    if (o_.opsu.empty()) {
      throw precondition_error("missing --opsu");
    }
    report.inputs["opsu"] = o_.opsu;
    report.inputs["param"] = o_.param;
    std::vector<std::pair<std::string, Role>> names;
    for (const auto& v : f.source()->names()) {
      names.emplace_back(v, Role::source);
    }
    names.emplace_back(o_.param, Role::parameter);
    const auto ctx = VarContext::make(std::move(names));
    std::vector<Polynomial> deformation;
    for (const auto& c : split_list(library_ ? library_->expand(o_.opsu) : o_.opsu)) {
      deformation.push_back(parse_poly(c, ctx));
    }
    const auto F = check_opsu(Unfolding(f, {o_.param}, std::move(deformation)), ae_budget());
    report.certification["opsu_order"] = *F.certificate.jet_order;
    return F;
  }

  SubstantialFlag substantial() const {
    if (library_ && library_->file().find("unfolding", o_.opsu) && library_->substantial(o_.opsu).asserted) {
      return {true};
    }
    return {o_.substantial};
  }

  Report report;

private:
  static std::optional<int> env_budget() {
    if (const char* v = std::getenv("GERMFORGE_JET_BUDGET")) {
      return std::stoi(v);
    }
    return std::nullopt;
  }

  const Options& o_;
  std::optional<GermLibrary> library_;
};

void run_quotient(Session& s, const Options& o, bool tau) {
  const auto g = s.function(o.expr, "expr");
  const auto q = tau ? tjurina(g, s.quotient_budget()) : milnor(g, s.quotient_budget());
  s.report.results[tau ? "tau" : "mu"] = q.dimension;
  s.report.certification["order"] = q.certificate_order;
}

void run_qbasis(Session& s, const Options& o) {
  const auto g = s.function(o.expr, "expr");
  const auto basis = quotient_monomial_basis(g, s.quotient_budget());
  s.report.results["dimension"] = basis.size();
  s.report.results["basis"] = monomials_json(basis, g.context());
}

void run_weights(Session& s, const Options& o) {
  if (!o.map.empty() || !o.germ.empty()) {
    const auto f = s.germ();
    const auto w = find_map_weights(f.components());
    s.report.results["quasihomogeneous"] = w.has_value();
    if (w) {
      s.report.results["source_weights"] = w->source;
      s.report.results["target_degrees"] = w->target;
    }
    return;
  }
  const auto g = s.function(o.expr, "expr");
  const auto w = find_weights(g);
  s.report.results["quasihomogeneous"] = w.has_value();
  if (w) {
    s.report.results["weights"] = w->weights;
    s.report.results["degree"] = w->degree;
  } else {
    s.report.results["r_equivalent_quasihomogeneous"] = is_r_equiv_quasihomogeneous(g, s.quotient_budget());
  }
}

void run_classify(Session& s, const Options& o) {
  const auto g = s.function(o.expr, "expr");
  const auto t = classify_function(g, s.quotient_budget());
  s.report.results["type"] = t.tag();
  s.report.results["simple"] = t.is_simple();
  s.report.results["corank"] = t.corank;
  s.report.results["mu"] = t.mu ? Json(*t.mu) : Json();
  s.report.results["tau"] = t.tau ? Json(*t.tau) : Json();
}

void run_codim(Session& s, bool basis) {
  const auto f = s.germ();
  const auto r = ae_codim(f, s.ae_budget());
  s.report.results["codim"] = r.codim;
  if (basis) {
    s.report.results["basis"] = fields_json(r.basis);
  }
  s.report.certification["order"] = r.certified_order;
  s.report.certification["method"] = r.method;
}

void add_lower_bound_warning(Session& s, const AugmentationCodim& c) {
  if (c.lower_bound_only) {
    s.report.warnings.push_back("lower-bound-only: g is not quasihomogeneous and the unfolding is not asserted "
                                "substantial");
  }
}

void add_catalog_match(Session& s, const MapGerm& A) {
  const auto hit = builtin_catalog().lookup(A);
  s.report.results["catalog"] = hit ? Json(hit->label) : Json();
}

int run_augment(Session& s, const Options& o) {
  const auto f = s.germ();
  const auto F = s.opsu(f);
  const auto g = s.function(o.g, "g");
  const auto a = make_augmented(f, F, g, s.substantial(), s.ae_budget());
  s.report.results["germ"] = a.result.to_string();
  s.report.results["codim"] = augmentation_codim_json(a.codim);
  add_catalog_match(s, a.result);
  s.report.certification["f_order"] = a.f_order;
  add_lower_bound_warning(s, a.codim);
  return 0;
}

int run_acodim(Session& s, const Options& o) {
  if (!o.f_codim) {
    throw precondition_error("missing --f-codim");
  }
  s.report.inputs["f_codim"] = *o.f_codim;
  const auto g = s.function(o.g, "g");
  const auto c = augmentation_codim(*o.f_codim, g, s.substantial(), s.quotient_budget());
  s.report.results["codim"] = augmentation_codim_json(c);
  s.report.certification["tau_order"] = c.tau_order;
  add_lower_bound_warning(s, c);
  return c.lower_bound_only && !o.allow_lower_bound ? 3 : 0;
}

int run_versal(Session& s, const Options& o) {
  const auto f = s.germ();
  const auto F = s.opsu(f);
  const auto g = s.function(o.g, "g");
  const auto a = make_augmented(f, F, g, s.substantial(), s.ae_budget());
  const auto V = build_versal(a);
  const bool ok = verify_versal(a, V, s.ae_budget());
  s.report.results["germ"] = a.result.to_string();
  s.report.results["parameters"] = V.params();
  Json comps = Json::array();
  for (const auto& c : V.deformation()) {
    comps.push_back(c.to_string());
  }
  s.report.results["unfolding"] = comps;
  s.report.results["versal"] = ok;
  s.report.certification["f_order"] = a.f_order;
  return ok ? 0 : 2;
}

int run_simple(Session& s, const Options& o) {
  const auto g = s.function(o.g, "g");
  std::optional<MapGerm> f;
  if (!o.map.empty() || !o.germ.empty()) {
    f = s.germ();
  }
  std::size_t f_codim = 0;
  if (o.f_codim) {
    f_codim = *o.f_codim;
  } else if (f) {
    const auto r = ae_codim(*f, s.ae_budget());
    f_codim = r.codim;
    s.report.certification["f_order"] = r.certified_order;
  } else {
    throw precondition_error("missing --f-codim (or -m)");
  }
  s.report.inputs["f_codim"] = f_codim;
  Tri f_simple = Tri::unknown;
  if (!o.f_simple.empty()) {
    f_simple = parse_tri(o.f_simple);
  } else if (f) {
    if (const auto hit = builtin_catalog().lookup(*f)) {
      f_simple = hit->entry->simple ? Tri::yes : Tri::no;
    }
  }
  s.report.inputs["f_simple"] = to_string(f_simple);

  if (f && !o.opsu.empty()) {
    const auto F = s.opsu(*f);
    const auto A = augment(*f, F, g);
    const auto r = resolve_simplicity(f_codim, f_simple, g, A, builtin_catalog(), s.quotient_budget());
    s.report.results["germ"] = A.to_string();
    s.report.results["simplicity"] = verdict_json(r.verdict);
    s.report.results["computed"] = verdict_json(r.computed);
    s.report.results["catalog"] = r.catalog ? verdict_json(*r.catalog) : Json();
    if (r.contradiction) {
      s.report.warnings.push_back("contradiction between computed and catalog verdicts");
      return 2;
    }
  } else {
    s.report.results["simplicity"] = verdict_json(decide_simplicity(f_codim, f_simple, g, s.quotient_budget()));
  }
  return 0;
}

Witness parse_family(const std::string& name) {
  if (name == "P8") {
    return Witness::P8;
  }
  if (name == "X9") {
    return Witness::X9;
  }
  if (name == "J10") {
    return Witness::J10plus;
  }
  throw precondition_error("family must be P8, X9 or J10");
}

void run_modality(Session& s, const Options& o) {
  std::optional<Polynomial> g;
  if (!o.family.empty()) {
    const auto w = parse_family(o.family);
    s.report.inputs["family"] = o.family;
    s.report.inputs["lambda"] = o.lambda;
    const auto ctx = VarContext::make(w == Witness::P8 ? std::vector<std::string>{"x", "y", "z"}
                                                       : std::vector<std::string>{"x", "y"});
    g = unimodal_family(w, Rat(o.lambda), ctx);
    s.report.results["g"] = g->to_string();
  } else {
    g = s.function(o.g, "g");
  }
  std::optional<int> m;
  if (o.f_codim) {
    s.report.inputs["f_codim"] = *o.f_codim;
    s.report.inputs["mu_constant_qh"] = o.mu_constant_qh;
    m = modality_of_augmentation(*o.f_codim, *g, o.mu_constant_qh, s.quotient_budget());
  } else {
    m = modality_of_function(*g, s.quotient_budget());
  }
  s.report.results["modality"] = m ? Json(*m) : Json();
  if (!m) {
    s.report.warnings.push_back("modality unknown");
  }
}

int run_table(Session& s, const Options& o) {
  Table44Options opts;
  opts.ks = o.ks;
  opts.k_budget = s.ae_budget();
  s.report.inputs["ks"] = o.ks;
  s.report.inputs["slots"] = opts.slot_labels;
  const auto table = generate_table44(opts);
  s.report.results["rows"] = table_json(table);
  s.report.warnings.push_back(table44_conjecture);
  bool ok = true;
  for (const auto& e : table) {
    for (const auto& i : e.instances) {
      ok = ok && i.codim_matches() && i.matches_catalog;
    }
  }
  return ok ? 0 : 2;
}

std::string table_text(const Report& r) {
  std::string out;
  for (const auto& row : r.results["rows"]) {
    out += std::to_string(row["row"].get<int>()) + "  " + row["type"].get<std::string>() + "  " +
           row["normal_form"].get<std::string>() + "  codim " + row["codim"].get<std::string>();
    if (!row["constraints"].get<std::string>().empty()) {
      out += "  (" + row["constraints"].get<std::string>() + ")";
    }
    out += "\n";
    for (const auto& i : row["instances"]) {
      out += "     " + i["label"].get<std::string>() + "  codim " + std::to_string(i["codim"].get<int>()) +
             " = " + std::to_string(i["f_codim"].get<int>()) + " * " + std::to_string(i["tau"].get<int>()) +
             (i["codim_matches"].get<bool>() ? "" : "  MISMATCH") + "  " +
             i["simplicity"]["status"].get<std::string>() + " (" +
             i["simplicity"]["justification"].get<std::string>() + ")\n";
    }
  }
  for (const auto& w : r.warnings) {
    out += "warning: " + w + "\n";
  }
  return out;
}

int run_catalog(Session& s, const Options& o) {
  s.report.inputs["action"] = o.catalog_action;
  if (o.catalog_action == "list") {
    Json list = Json::array();
    for (const auto& e : builtin_catalog().entries()) {
      Json j;
      j["id"] = e.id;
      j["label"] = e.label;
      j["components"] = e.components;
      j["codim"] = e.codim;
      j["simple"] = e.simple;
      j["source"] = e.source;
      list.push_back(std::move(j));
    }
    s.report.results["entries"] = std::move(list);
    return 0;
  }
  if (o.catalog_action == "lookup") {
    const auto f = s.germ();
    const auto hit = builtin_catalog().lookup(f);
    s.report.results["match"] = hit ? Json(hit->label) : Json();
    if (hit) {
      s.report.results["codim"] = builtin_catalog().stored_codim(*hit);
      s.report.results["simple"] = hit->entry->simple;
    }
    return 0;
  }
  throw precondition_error("catalog action must be list or lookup");
}

std::string catalog_list_text(const Report& r) {
  std::string out;
  for (const auto& e : r.results["entries"]) {
    out += e["id"].get<std::string>() + "  " + e["label"].get<std::string>() + "  (" +
           e["components"].get<std::string>() + ")  codim " + e["codim"].get<std::string>() +
           (e["simple"].get<bool>() ? "  simple" : "  not simple") + "  [" + e["source"].get<std::string>() + "]\n";
  }
  return out;
}

void emit(const Session& s, const Options& o) {
  if (o.json) {
    std::cout << emit_json(s.report);
  } else if (s.report.command == "table44" && s.report.results.contains("rows")) {
    std::cout << table_text(s.report);
  } else if (s.report.command == "catalog" && s.report.results.contains("entries")) {
    std::cout << catalog_list_text(s.report);
  } else {
    std::cout << emit_text(s.report);
  }
}

int dispatch(Session& s, const Options& o) {
  const auto& c = s.report.command;
  if (c == "mu" || c == "tau") {
    run_quotient(s, o, c == "tau");
  } else if (c == "qbasis") {
    run_qbasis(s, o);
  } else if (c == "weights") {
    run_weights(s, o);
  } else if (c == "classify") {
    run_classify(s, o);
  } else if (c == "codim" || c == "nbasis") {
    run_codim(s, c == "nbasis");
  } else if (c == "augment") {
    return run_augment(s, o);
  } else if (c == "acodim") {
    return run_acodim(s, o);
  } else if (c == "versal") {
    return run_versal(s, o);
  } else if (c == "simple") {
    return run_simple(s, o);
  } else if (c == "modality") {
    run_modality(s, o);
  } else if (c == "table44") {
    return run_table(s, o);
  } else if (c == "catalog") {
    return run_catalog(s, o);
  }
  return 0;
}

int fail(Session* s, const Options& o, const std::string& kind, const std::string& what, int code) {
  std::cerr << "germforge: " << what << "\n";
  if (s && o.json) {
    s->report.results = Json::object();
    s->report.results["error"] = {{"kind", kind}, {"message", what}};
    std::cout << emit_json(s->report);
  }
  return code;
}

} // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"germforge: augmentations of map-germs, A_e-codimension and simplicity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit a JSON report");
  app.add_option("--jet-order", o.jet_order, "Jet order budget (default: $GERMFORGE_JET_BUDGET or built-in)");
  app.add_option("--germ-file", o.germ_file, "Load named definitions from a germ file");
  app.add_option("--germ", o.germ, "Germ section name (with --germ-file)");
  app.add_option("--function", o.function, "Function section name (with --germ-file)");
  app.add_option("-e,--expr", o.expr, "Function expression");
  app.add_option("-g", o.g, "Augmenting function");
  app.add_option("-m,--map", o.map, "Map-germ components, separated by ';' or ','");
  app.add_option("--vars", o.vars, "Source variable order");
  app.add_option("--opsu", o.opsu, "Stable unfolding components, or an unfolding section name");
  app.add_option("--param", o.param, "Unfolding parameter name");
  app.add_option("--f-codim", o.f_codim, "A_e-codimension of the augmented germ");
  app.add_option("--f-simple", o.f_simple, "Simplicity of f: yes, no or unknown");
  app.add_flag("--substantial", o.substantial, "Assert that the unfolding is substantial");
  app.add_flag("--mu-constant-qh", o.mu_constant_qh, "Assert quasihomogeneous mu-constant deformations of g");
  app.add_flag("--allow-lower-bound", o.allow_lower_bound, "Exit 0 when only a lower bound is known");
  app.add_option("--family", o.family, "Unimodal family: P8, X9 or J10");
  app.add_option("--lambda", o.lambda, "Family parameter (rational)");
  app.add_option("--ks", o.ks, "Family indices for table44")->delimiter(',');

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"mu", "Milnor number"},
      {"tau", "Tjurina number"},
      {"qbasis", "Monomial basis of O/(g + Jg)"},
      {"weights", "Quasihomogeneous weights of a function or map"},
      {"classify", "ADE classification of a function"},
      {"codim", "A_e-codimension of a map-germ"},
      {"nbasis", "Basis of the A_e normal space"},
      {"augment", "Augment a germ by a function through a stable unfolding"},
      {"acodim", "Codimension of an augmentation from codim f and g"},
      {"versal", "Versal unfolding of an augmentation"},
      {"simple", "Simplicity verdict for an augmentation"},
      {"modality", "Modality of a function or an augmentation"},
      {"table44", "Simple augmentations C^4 -> C^4"},
      {"catalog", "List the catalog or look up a germ"},
  };
  std::string chosen;
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->callback([&chosen, name = name] { chosen = name; });
    if (name == "catalog") {
      sub->add_option("action", o.catalog_action, "list or lookup");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  std::optional<Session> session;
  try {
    session.emplace(o, chosen);
    const int code = dispatch(*session, o);
    emit(*session, o);
    return code;
  } catch (const not_certified& e) {
    return fail(session ? &*session : nullptr, o, "not_certified", e.what(), 2);
  } catch (const hypotheses_unmet& e) {
    return fail(session ? &*session : nullptr, o, "hypotheses_unmet", e.what(), 3);
  } catch (const not_stable& e) {
    return fail(session ? &*session : nullptr, o, "not_stable", e.what(), 3);
  } catch (const invalid_augmenting_function& e) {
    return fail(session ? &*session : nullptr, o, "invalid_augmenting_function", e.what(), 3);
  } catch (const not_an_unfolding& e) {
    return fail(session ? &*session : nullptr, o, "not_an_unfolding", e.what(), 3);
  } catch (const error& e) {
    return fail(session ? &*session : nullptr, o, "usage", e.what(), 1);
  } catch (const std::exception& e) {
    return fail(session ? &*session : nullptr, o, "usage", e.what(), 1);
  }
}
