// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include "germforge/ade.hpp"
#include "germforge/ae_calculus.hpp"
#include "germforge/augmentation.hpp"
#include "germforge/catalog.hpp"
#include "germforge/dense.hpp"
#include "germforge/local_algebra.hpp"
#include "germforge/report.hpp"
#include "germforge/simplicity.hpp"
#include "germforge/table44.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace germforge;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s > limit_s) {
    o.ok = false;
    o.detail << " [took " << s << " s, limit " << limit_s << " s]";
  }
  failures += o.ok ? 0 : 1;
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << name << " (" << std::fixed;
  std::cout.precision(2);
  std::cout << s << " s)" << o.detail.str() << std::endl;
}

ContextPtr ctx(std::vector<std::string> names) { return VarContext::make(std::move(names)); }
Polynomial fn(const std::string& text) { return parse_poly(text, ctx(variables_in(text))); }

std::size_t standard_monomials(const std::vector<Monomial>& gens, std::size_t n, unsigned bound) {
  std::size_t count = 0;
  for (const auto& m : monomials_up_to(n, bound)) {
    bool hit = false;
    for (const auto& g : gens) {
      hit = hit || g.divides(m);
    }
    count += hit ? 0 : 1;
  }
  return count;
}

struct Base {
  MapGerm f;
  Opsu F;
};

Base base(const std::string& id, std::optional<long> k = std::nullopt) {
  const auto& c = builtin_catalog();
  const auto inst = c.instantiate(c.require(id), k);
  return {inst.germ, check_opsu(*c.opsu(inst))};
}

Polynomial random_poly(std::mt19937_64& rng, const ContextPtr& c, unsigned lo, unsigned hi, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<unsigned> deg(lo, hi);
  Polynomial p(c);
  for (int t = 0; t < terms; ++t) {
    Monomial m(c->size());
    const auto d = deg(rng);
    for (unsigned i = 0; i < d; ++i) {
      m.exps[std::uniform_int_distribution<std::size_t>(0, c->size() - 1)(rng)]++;
    }
    p.add_term(m, Rat(coeff(rng)));
  }
  return p;
}

std::vector<Polynomial> random_diffeo(std::mt19937_64& rng, const ContextPtr& c) {
  const auto n = c->size();
  std::uniform_int_distribution<int> entry(-2, 2);
  for (;;) {
    RatMatrix lin(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        lin(i, j) = entry(rng);
      }
    }
    if (lin.rank() < n) {
      continue;
    }
    std::vector<Polynomial> out;
    for (std::size_t i = 0; i < n; ++i) {
      auto p = random_poly(rng, c, 2, 3, 2);
      for (std::size_t j = 0; j < n; ++j) {
        p += lin(i, j) * Polynomial::variable(c, j);
      }
      out.push_back(std::move(p));
    }
    return out;
  }
}

} // namespace

int main() {
  criterion(1, "local-algebra corpus: mu and tau of ADE normal forms", 5.0, [](Outcome& o) {
    const auto c2 = ctx({"x", "y"});
    for (unsigned k = 1; k <= 6; ++k) {
      const auto g = ade_normal_form("A" + std::to_string(k), c2);
      const auto oracle = standard_monomials({Monomial({k, 0}), Monomial({0, 1})}, 2, 2 * k + 2);
      o.expect(oracle == k, "oracle A" + std::to_string(k));
      o.expect(milnor(g).dimension == oracle, "mu A" + std::to_string(k));
      o.expect(tjurina(g).dimension == oracle, "tau A" + std::to_string(k));
    }
    for (const auto& [label, mu] : std::vector<std::pair<std::string, std::size_t>>{
             {"D4", 4}, {"D5", 5}, {"D6", 6}, {"E6", 6}, {"E7", 7}, {"E8", 8}}) {
      const auto g = ade_normal_form(label, c2);
      o.expect(milnor(g).dimension == mu, "mu " + label);
      o.expect(tjurina(g).dimension == mu, "tau " + label);
    }
  });

  criterion(2, "codimension-10 unimodal augmentation", 10.0, [](Outcome& o) {
    const auto f = parse_map_germ("z^3");
    const auto f_codim = ae_codim(f).codim;
    o.expect(f_codim == 1, "codim z^3 = " + std::to_string(f_codim));
    const auto g = fn("x^3 + y^6 + x^2*y^2");
    o.expect(tjurina(g).dimension == 10, "tau(g)");
    const auto c = augmentation_codim(f_codim, g);
    o.expect(c.value == 10 && !c.lower_bound_only, "augmentation codim = " + std::to_string(c.value));
    o.expect(modality_of_augmentation(f_codim, g, true) == 1, "modality");
  });

  criterion(3, "augmentation codim formula against the jet computation", 300.0, [](Outcome& o) {
    struct Case {
      std::string name;
      std::string base;
      std::optional<long> k;
      std::string g;
      std::size_t expected;
    };
    std::vector<Case> cases;
    for (long k = 1; k <= 3; ++k) {
      cases.push_back({"S_" + std::to_string(k), "curve", 1, "z^" + std::to_string(k + 1), std::size_t(k)});
    }
    for (long k = 2; k <= 4; ++k) {
      cases.push_back({"B_" + std::to_string(k), "curve", k, "z^2", std::size_t(k)});
    }
    cases.push_back({"F_4", "curve", 2, "z^3", 4});
    for (long k = 1; k <= 3; ++k) {
      const auto P = ade_normal_form("A" + std::to_string(k), ctx({"x", "y", "z"})).to_string();
      cases.push_back({"3_A" + std::to_string(k), "t3", {}, P, std::size_t(k)});
    }
    cases.push_back({"4^2_2", "11_k", 2, "y^2 + z^2", 2});
    for (const auto& c : cases) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto b = base(c.base, c.k);
      const auto g = fn(c.g);
      const auto A = augment(b.f, b.F, g);
      const auto formula = augmentation_codim(ae_codim(b.f).codim, g);
      const auto jet = ae_codim(A, 12);
      const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      o.expect(!formula.lower_bound_only && formula.value == c.expected && jet.codim == c.expected,
               c.name + ": formula " + std::to_string(formula.value) + ", jet " + std::to_string(jet.codim));
      o.expect(s < 60.0, c.name + " over 60 s");
    }
  });

  criterion(4, "versal unfoldings of S_2, B_2, F_4 are minimal", 120.0, [](Outcome& o) {
    struct Case {
      std::string name;
      long k;
      std::string g;
      std::size_t params;
    };
    for (const auto& c : std::vector<Case>{{"S_2", 1, "z^3", 2}, {"B_2", 2, "z^2", 2}, {"F_4", 2, "z^3", 4}}) {
      const auto b = base("curve", c.k);
      const auto a = make_augmented(b.f, b.F, fn(c.g));
      const auto V = build_versal(a);
      o.expect(V.m() == c.params, c.name + " parameters " + std::to_string(V.m()));
      o.expect(verify_versal(a, V), c.name + " not versal");
      for (std::size_t i = 0; i < V.m(); ++i) {
        o.expect(!verify_versal(a, drop_parameter(V, i)), c.name + " still versal without " + V.params()[i]);
      }
    }
  });

  criterion(5, "lifted fields of F_4 are nonzero and independent", 60.0, [](Outcome& o) {
    const auto b = base("curve", 2);
    const auto a = make_augmented(b.f, b.F, fn("z^3"));
    const auto check = check_lifted_fields(a);
    o.expect(check.count == 4, "count " + std::to_string(check.count));
    o.expect(check.all_nonzero(), "zero field");
    o.expect(check.independent(), "rank " + std::to_string(check.rank));
  });

  criterion(6, "simplicity verdicts", 120.0, [](Outcome& o) {
    const auto& cat = builtin_catalog();
    std::size_t contradictions = 0;
    const auto run = [&](const CatalogInstance& inst) {
      const auto aug = cat.augmentation_of(inst);
      const auto f_codim = ae_codim(aug->base.germ).codim;
      const auto F = check_opsu(*cat.opsu(aug->base));
      const auto A = augment(aug->base.germ, F, aug->g);
      const auto r = resolve_simplicity(f_codim, aug->base.entry->simple ? Tri::yes : Tri::no, aug->g, A);
      contradictions += r.contradiction ? 1 : 0;
      return r;
    };
    const std::vector<std::pair<std::string, std::vector<long>>> families = {
        {"S_k", {1, 2, 3}}, {"B_k", {2, 3, 4}}, {"4sq_k", {2, 3}}, {"5_k", {2, 3, 4}}};
    for (const auto& [id, ks] : families) {
      for (long k : ks) {
        const auto r = run(cat.instantiate(cat.require(id), k));
        o.expect(r.computed.status == SimplicityStatus::simple &&
                     r.computed.justification != Justification::catalog,
                 id + " k=" + std::to_string(k));
      }
    }
    for (const auto* id : {"3_Q", "4_Q", "3_P"}) {
      for (const auto* l : {"A1", "A2", "A3", "D4"}) {
        const auto r = run(cat.instantiate(cat.require(id), std::nullopt, l));
        o.expect(r.computed.status == SimplicityStatus::simple, std::string(id) + " " + l);
      }
    }
    for (const auto* id : {"5sq", "5cu"}) {
      const auto r = run(cat.instantiate(cat.require(id)));
      o.expect(r.computed.status == SimplicityStatus::simple &&
                   r.computed.justification == Justification::morse_augmenting_function,
               id);
    }
    const auto c3 = ctx({"u", "v", "w"});
    const auto c2 = ctx({"u", "v"});
    for (const auto& g : {unimodal_family(Witness::P8, Rat(1), c3), unimodal_family(Witness::X9, Rat(1), c2),
                          unimodal_family(Witness::J10plus, Rat(1), c2)}) {
      for (const auto* b : {"t3", "S", "mt5_1"}) {
        const auto bb = base(b);
        const auto A = augment(bb.f, bb.F, g);
        const auto r = resolve_simplicity(ae_codim(bb.f).codim, Tri::yes, g, A);
        contradictions += r.contradiction ? 1 : 0;
        o.expect(r.verdict.status == SimplicityStatus::non_simple &&
                     r.verdict.justification == Justification::nonsimple_augmenting_function,
                 "unimodal g over " + std::string(b));
      }
    }
    const auto curve = base("curve", 2);
    for (const auto& [g, status, label] : std::vector<std::tuple<std::string, SimplicityStatus, std::string>>{
             {"z^3", SimplicityStatus::simple, "F_4"}, {"z^4", SimplicityStatus::non_simple, ""}}) {
      const auto gz = fn(g);
      const auto r = resolve_simplicity(2, Tri::yes, gz, augment(curve.f, curve.F, gz));
      o.expect(r.computed.status == SimplicityStatus::unknown, "(y^2,y^5) by " + g + " computed");
      o.expect(r.verdict.status == status && r.verdict.justification == Justification::catalog,
               "(y^2,y^5) by " + g + " catalog");
      if (!label.empty()) {
        o.expect(r.verdict.catalog_entry == label, "catalog entry " + r.verdict.catalog_entry);
      }
    }
    o.expect(contradictions == 0, std::to_string(contradictions) + " contradictions");
  });

  criterion(7, "C^4 to C^4 table regeneration", 60.0, [](Outcome& o) {
    const auto table = generate_table44();
    o.expect(table.size() == 6, "rows " + std::to_string(table.size()));
    const std::vector<std::string> tags = {"3_{P}", "4_{Q}", "4^2_{k}", "5_{k}", "5^2", "5^3"};
    for (std::size_t i = 0; i < table.size() && i < tags.size(); ++i) {
      o.expect(table[i].tag == tags[i], "row " + std::to_string(i + 1) + " is " + table[i].tag);
      o.expect(!table[i].instances.empty(), table[i].tag + " has no instances");
      for (const auto& inst : table[i].instances) {
        o.expect(inst.codim_matches(), inst.label + " codim " + std::to_string(inst.codim.value) + " vs " +
                                           std::to_string(inst.formula_codim));
        o.expect(inst.matches_catalog, inst.label + " normal form");
        o.expect(inst.verdict.status == SimplicityStatus::simple, inst.label + " verdict");
      }
    }
  });

  criterion(8, "property suites: invariance, ring laws, substitution, determinism", 120.0, [](Outcome& o) {
    std::mt19937_64 rng(20240601);
    const auto c2 = ctx({"x", "y"});
    const auto g = fn("x^3 + y^6 + x^2*y^2");
    for (int i = 0; i < 20; ++i) {
      const auto h = compose(g, random_diffeo(rng, c2), c2);
      o.expect(tjurina(h).dimension == 10, "tau of " + h.to_string());
      o.expect(augmentation_codim(1, h, SubstantialFlag{true}).value == 10, "codim of " + h.to_string());
    }
    const auto c3 = ctx({"x", "y", "z"});
    for (int i = 0; i < 500; ++i) {
      const auto a = random_poly(rng, c3, 0, 3, 4);
      const auto b = random_poly(rng, c3, 0, 3, 4);
      const auto c = random_poly(rng, c3, 0, 3, 4);
      const bool ring = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c;
      const std::vector<Polynomial> images = {random_poly(rng, c2, 1, 2, 3), random_poly(rng, c2, 1, 2, 3),
                                              random_poly(rng, c2, 1, 2, 3)};
      const auto phi = [&](const Polynomial& p) { return compose(p, images, c2); };
      const bool hom = phi(a + b) == phi(a) + phi(b) && phi(a * b) == phi(a) * phi(b);
      if (!ring || !hom) {
        o.expect(false, "case " + std::to_string(i));
        break;
      }
    }
    const auto emit = [] {
      Report r;
      r.command = "table44";
      r.results["rows"] = table_json(generate_table44());
      r.warnings.push_back(table44_conjecture);
      return emit_json(r);
    };
    o.expect(emit() == emit(), "reports differ");
  });

  return failures == 0 ? 0 : 1;
}
