#include "germforge/augmentation.hpp"

#include "germforge/errors.hpp"
#include "germforge/quasihomog.hpp"

#include <algorithm>

namespace germforge {

AugmentationCodim augmentation_codim(std::size_t f_codim, const Polynomial& g, SubstantialFlag substantial,
                                     int k_max) {
  AugmentationCodim out;
  const auto t = tjurina(g, k_max);
  out.f_codim = f_codim;
  out.tau = t.dimension;
  out.tau_order = t.certificate_order;
  out.quasihomogeneous = is_r_equiv_quasihomogeneous(g, k_max);
  out.value = f_codim * t.dimension;
  out.lower_bound_only = !out.quasihomogeneous && !substantial.asserted;
  return out;
}

AugmentedGerm make_augmented(const MapGerm& f, const Opsu& F, const Polynomial& g, SubstantialFlag substantial,
                             int k_budget) {
  auto result = augment(f, F, g);
  const auto ae = ae_codim(f, k_budget);
  auto codim = augmentation_codim(ae.codim, g, substantial);
  auto tau_basis = quotient_monomial_basis(g);

  std::vector<VectorFieldAlongF> gammas;
  if (ae.codim > 0) {
    const JetModel model(f, static_cast<unsigned>(ae.certified_order));
    gammas.push_back({initial_speed(F.unfolding, 0)});
    if (model.quotient_rank(gammas) != 1) {
      throw hypotheses_unmet("initial speed of the unfolding vanishes in the normal space of f");
    }
    for (const auto& v : model.normal_basis()) {
      if (gammas.size() == ae.codim) {
        break;
      }
      gammas.push_back(v);
      if (model.quotient_rank(gammas) != gammas.size()) {
        gammas.pop_back();
      }
    }
  }
  return AugmentedGerm{std::move(result), f,        F, g, std::move(tau_basis), std::move(gammas),
                       codim,             ae.certified_order};
}

std::vector<std::string> versal_parameter_names(const AugmentedGerm& a) {
  const auto& src = *a.result.source();
  std::vector<std::string> names;
  for (std::size_t s = 1; s <= a.tau_basis.size(); ++s) {
    for (std::size_t m = 1; m <= a.gamma_basis.size(); ++m) {
      std::string name = "lam" + std::to_string(s) + "_" + std::to_string(m);
      while (src.index_of(name)) {
        name += "_";
      }
      names.push_back(std::move(name));
    }
  }
  return names;
}

Unfolding build_versal(const AugmentedGerm& a) {
  if (a.codim.lower_bound_only) {
    throw hypotheses_unmet("g is not quasihomogeneous and the unfolding is not asserted substantial");
  }
  if (a.gamma_basis.empty()) {
    throw hypotheses_unmet("f is stable; there is nothing to unfold");
  }
  const auto names = versal_parameter_names(a);
  const auto& base = a.result;
  std::vector<std::pair<std::string, Role>> vars;
  for (std::size_t i = 0; i < base.n(); ++i) {
    vars.emplace_back(base.source()->name(i), base.source()->role(i));
  }
  for (const auto& name : names) {
    vars.emplace_back(name, Role::parameter);
  }
  const auto ctx = VarContext::make(std::move(vars));
  const auto r = a.tau_basis.size();
  const auto k = a.gamma_basis.size();
  auto param = [&](std::size_t s, std::size_t m) { return Polynomial::variable(ctx, base.n() + s * k + m); };

  std::vector<Polynomial> tau;
  for (const auto& t : a.tau_basis) {
    tau.push_back(Polynomial::monomial(a.g.context_ptr(), t).embed(ctx));
  }
  // lambda -> g(z) + sum_s l_{s,1} tau_s(z)
  auto lambda = a.g.embed(ctx);
  for (std::size_t s = 0; s < r; ++s) {
    lambda += param(s, 0) * tau[s];
  }
  const auto& big = a.F.unfolding.map();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.f.n(); ++i) {
    images.push_back(Polynomial::variable(ctx, a.f.source()->name(i)));
  }
  images.push_back(lambda);

  std::vector<Polynomial> deformation;
  for (std::size_t i = 0; i < a.f.p(); ++i) {
    auto c = compose(big.component(i), images, ctx);
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t m = 1; m < k; ++m) {
        c += param(s, m) * tau[s] * a.gamma_basis[m].components[i].embed(ctx);
      }
    }
    deformation.push_back(std::move(c));
  }
  for (std::size_t j = a.f.p(); j < base.p(); ++j) {
    deformation.push_back(base.component(j).embed(ctx));
  }
  return Unfolding(base, names, std::move(deformation));
}

bool verify_versal(const AugmentedGerm& a, const Unfolding& V, int k_budget) {
  if (!(V.base() == a.result)) {
    throw precondition_error("unfolding is not built over the augmentation");
  }
  return V.m() == a.tau_basis.size() * a.gamma_basis.size() && V.m() == a.codim.value && is_versal(V, k_budget);
}

Unfolding drop_parameter(const Unfolding& V, std::size_t index) {
  if (index >= V.m()) {
    throw precondition_error("no parameter with index " + std::to_string(index));
  }
  if (V.m() == 1) {
    throw precondition_error("cannot drop the only parameter");
  }
  auto params = V.params();
  params.erase(params.begin() + static_cast<std::ptrdiff_t>(index));
  std::vector<std::pair<std::string, Role>> vars;
  const auto& src = *V.base().source();
  for (std::size_t i = 0; i < src.size(); ++i) {
    vars.emplace_back(src.name(i), src.role(i));
  }
  for (const auto& p : params) {
    vars.emplace_back(p, Role::parameter);
  }
  const auto ctx = VarContext::make(std::move(vars));
  const auto& big = V.map();
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < big.source()->size(); ++i) {
    if (i == V.base().n() + index) {
      images.emplace_back(ctx);
    } else {
      images.push_back(Polynomial::variable(ctx, big.source()->name(i)));
    }
  }
  std::vector<Polynomial> deformation;
  for (const auto& c : V.deformation()) {
    deformation.push_back(compose(c, images, ctx));
  }
  return Unfolding(V.base(), std::move(params), std::move(deformation));
}

std::vector<VectorFieldAlongF> lifted_fields(const AugmentedGerm& a) {
  const auto& ctx = a.result.source();
  std::vector<VectorFieldAlongF> out;
  for (const auto& t : a.tau_basis) {
    const auto tau = Polynomial::monomial(a.g.context_ptr(), t).embed(ctx);
    for (const auto& gamma : a.gamma_basis) {
      VectorFieldAlongF v;
      for (const auto& c : gamma.components) {
        v.components.push_back(tau * c.embed(ctx));
      }
      while (v.components.size() < a.result.p()) {
        v.components.emplace_back(ctx);
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

LiftedFieldCheck check_lifted_fields(const AugmentedGerm& a, int k_budget) {
  const auto ae = ae_codim(a.result, k_budget);
  const JetModel model(a.result, static_cast<unsigned>(ae.certified_order));
  const auto fields = lifted_fields(a);
  LiftedFieldCheck check;
  check.count = fields.size();
  check.order = ae.certified_order;
  for (const auto& v : fields) {
    if (!model.in_image(v)) {
      ++check.nonzero;
    }
  }
  check.rank = model.quotient_rank(fields);
  return check;
}

} // namespace germforge
