#include "germforge/ade.hpp"

#include "germforge/dense.hpp"
#include "germforge/errors.hpp"

namespace germforge {

std::string to_string(Witness w) {
  switch (w) {
  case Witness::P8:
    return "P8";
  case Witness::X9:
    return "X9";
  case Witness::J10plus:
    return "J10plus";
  case Witness::none:
    break;
  }
  return "none";
}

std::string FunctionType::tag() const {
  switch (kind) {
  case FunctionKind::A:
    return "A" + std::to_string(k);
  case FunctionKind::D:
    return "D" + std::to_string(k);
  case FunctionKind::E6:
    return "E6";
  case FunctionKind::E7:
    return "E7";
  case FunctionKind::E8:
    return "E8";
  case FunctionKind::non_simple:
    return "NonSimple(" + to_string(witness) + ")";
  case FunctionKind::not_isolated:
    break;
  }
  return "NotIsolated";
}

CubicRoots classify_binary_cubic(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  if (is_zero(a) && is_zero(b) && is_zero(c) && is_zero(d)) {
    throw precondition_error("zero binary cubic");
  }
  // partials as binary quadratics in (v1^2, v1 v2, v2^2)
  const Rat p[3] = {3 * a, 2 * b, c};
  const Rat q[3] = {b, 2 * c, 3 * d};
  RatMatrix pair(2, 3);
  for (int i = 0; i < 3; ++i) {
    pair(0, static_cast<std::size_t>(i)) = p[i];
    pair(1, static_cast<std::size_t>(i)) = q[i];
  }
  if (pair.rank() <= 1) {
    return CubicRoots::triple_root; // gcd of the partials has degree 2
  }
  RatMatrix sylvester(4, 4);
  for (std::size_t i = 0; i < 3; ++i) {
    sylvester(0, i) = p[i];
    sylvester(1, i + 1) = p[i];
    sylvester(2, i) = q[i];
    sylvester(3, i + 1) = q[i];
  }
  return is_zero(sylvester.determinant()) ? CubicRoots::double_root : CubicRoots::distinct;
}

namespace {

struct BinaryCubic {
  Rat a, b, c, d;
  bool is_zero() const { return germforge::is_zero(a) && germforge::is_zero(b) && germforge::is_zero(c) && germforge::is_zero(d); }
};

// Cubic part of g restricted to the kernel of its Hessian (corank 2 only). The
// quadratic form has no cross terms with its radical, so after splitting off the
// Morse part the residual 3-jet is exactly this restriction.
BinaryCubic kernel_cubic(const Polynomial& g) {
  const auto d = g.context().size();
  RatMatrix hess(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      hess(i, j) = derivative(derivative(g, i), j).constant_term();
    }
  }
  const auto kernel = hess.nullspace();
  if (kernel.size() != 2) {
    throw precondition_error("kernel_cubic needs corank 2");
  }
  const auto plane = VarContext::make(std::vector<std::string>{"v1", "v2"});
  const auto v1 = Polynomial::variable(plane, 0);
  const auto v2 = Polynomial::variable(plane, 1);
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < d; ++i) {
    images.push_back(kernel[0][i] * v1 + kernel[1][i] * v2);
  }
  const auto cubic = compose(jet_truncate(g, 3), images, plane, 3u).homogeneous_part(3);
  using E = std::vector<std::uint32_t>;
  return {cubic.coefficient(Monomial(E{3, 0})), cubic.coefficient(Monomial(E{2, 1})),
          cubic.coefficient(Monomial(E{1, 2})), cubic.coefficient(Monomial(E{0, 3}))};
}

} // namespace

FunctionType classify_function(const Polynomial& g, int k_max) {
  require_singular_at_origin(g);
  FunctionType ft;
  ft.corank = hessian_corank_at_origin(g);
  try {
    ft.mu = milnor(g, k_max).dimension;
    ft.tau = tjurina(g, k_max).dimension;
  } catch (const not_certified&) {
    ft.kind = FunctionKind::not_isolated;
    return ft;
  }
  const auto mu = static_cast<int>(*ft.mu);
  if (ft.corank <= 1) {
    ft.kind = FunctionKind::A;
    ft.k = mu;
    return ft;
  }
  if (ft.corank >= 3) {
    ft.kind = FunctionKind::non_simple;
    ft.witness = Witness::P8;
    return ft;
  }
  const auto cubic = kernel_cubic(g);
  if (cubic.is_zero()) {
    ft.kind = FunctionKind::non_simple;
    ft.witness = Witness::X9;
    return ft;
  }
  switch (classify_binary_cubic(cubic.a, cubic.b, cubic.c, cubic.d)) {
  case CubicRoots::distinct:
  case CubicRoots::double_root:
    ft.kind = FunctionKind::D;
    ft.k = mu;
    return ft;
  case CubicRoots::triple_root:
    break;
  }
  switch (mu) {
  case 6:
    ft.kind = FunctionKind::E6;
    break;
  case 7:
    ft.kind = FunctionKind::E7;
    break;
  case 8:
    ft.kind = FunctionKind::E8;
    break;
  default:
    ft.kind = FunctionKind::non_simple;
    ft.witness = Witness::J10plus;
  }
  return ft;
}

bool is_morse(const Polynomial& g) { return hessian_corank_at_origin(g) == 0; }

std::optional<int> modality_of_function(const Polynomial& g, int k_max) {
  const auto ft = classify_function(g, k_max);
  if (ft.is_simple()) {
    return 0;
  }
  if (ft.kind != FunctionKind::non_simple) {
    return std::nullopt;
  }
  const std::size_t expected = ft.witness == Witness::P8 ? 8 : ft.witness == Witness::X9 ? 9 : 10;
  if (ft.mu && *ft.mu == expected) {
    return 1;
  }
  return std::nullopt;
}

namespace {

Polynomial var_pow(const ContextPtr& ctx, std::size_t i, unsigned e) {
  return Polynomial::variable(ctx, i).pow(e);
}

Polynomial squares_from(const ContextPtr& ctx, std::size_t first) {
  Polynomial out(ctx);
  for (std::size_t i = first; i < ctx->size(); ++i) {
    out += var_pow(ctx, i, 2);
  }
  return out;
}

void need_vars(const ContextPtr& ctx, std::size_t n, const std::string& what) {
  if (ctx->size() < n) {
    throw precondition_error(what + " needs at least " + std::to_string(n) + " variables");
  }
}

} // namespace

Polynomial ade_normal_form(const std::string& label, const ContextPtr& ctx) {
  if (label.size() < 2) {
    throw precondition_error("unknown simple singularity '" + label + "'");
  }
  const char family = label[0];
  int k = 0;
  try {
    k = std::stoi(label.substr(1));
  } catch (const std::exception&) {
    throw precondition_error("unknown simple singularity '" + label + "'");
  }
  if (family == 'A' && k >= 1) {
    need_vars(ctx, 1, label);
    return var_pow(ctx, 0, static_cast<unsigned>(k + 1)) + squares_from(ctx, 1);
  }
  if (family == 'D' && k >= 4) {
    need_vars(ctx, 2, label);
    return var_pow(ctx, 0, 2) * var_pow(ctx, 1, 1) + var_pow(ctx, 1, static_cast<unsigned>(k - 1)) +
           squares_from(ctx, 2);
  }
  if (family == 'E' && k >= 6 && k <= 8) {
    need_vars(ctx, 2, label);
    Polynomial core = var_pow(ctx, 0, 3);
    if (k == 6) {
      core += var_pow(ctx, 1, 4);
    } else if (k == 7) {
      core += var_pow(ctx, 0, 1) * var_pow(ctx, 1, 3);
    } else {
      core += var_pow(ctx, 1, 5);
    }
    return core + squares_from(ctx, 2);
  }
  throw precondition_error("unknown simple singularity '" + label + "'");
}

Polynomial unimodal_family(Witness family, const Rat& lambda, const ContextPtr& ctx) {
  const Rat l3 = lambda * lambda * lambda;
  switch (family) {
  case Witness::P8:
    need_vars(ctx, 3, "P8");
    if (is_zero(l3 + 27)) {
      throw precondition_error("P8 needs lambda^3 + 27 != 0");
    }
    return var_pow(ctx, 0, 3) + var_pow(ctx, 1, 3) + var_pow(ctx, 2, 3) +
           lambda * (var_pow(ctx, 0, 1) * var_pow(ctx, 1, 1) * var_pow(ctx, 2, 1)) + squares_from(ctx, 3);
  case Witness::X9:
    need_vars(ctx, 2, "X9");
    if (lambda * lambda == 4) {
      throw precondition_error("X9 needs lambda^2 != 4");
    }
    return var_pow(ctx, 0, 4) + var_pow(ctx, 1, 4) + lambda * (var_pow(ctx, 0, 2) * var_pow(ctx, 1, 2)) +
           squares_from(ctx, 2);
  case Witness::J10plus:
    need_vars(ctx, 2, "J10");
    if (is_zero(4 * l3 + 27)) {
      throw precondition_error("J10 needs 4 lambda^3 + 27 != 0");
    }
    return var_pow(ctx, 0, 3) + var_pow(ctx, 1, 6) + lambda * (var_pow(ctx, 0, 2) * var_pow(ctx, 1, 2)) +
           squares_from(ctx, 2);
  case Witness::none:
    break;
  }
  throw precondition_error("no unimodal family for this witness");
}

} // namespace germforge
