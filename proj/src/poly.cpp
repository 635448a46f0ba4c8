#include "germforge/poly.hpp"

#include "germforge/dense.hpp"
#include "germforge/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace germforge {

std::string_view role_name(Role r) {
  switch (r) {
  case Role::source:
    return "source";
  case Role::target:
    return "target";
  case Role::parameter:
    return "parameter";
  case Role::augmenting:
    return "augmenting";
  }
  return "source";
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

VarContext::VarContext(std::vector<std::string> names, std::vector<Role> roles)
    : names_(std::move(names)), roles_(std::move(roles)) {
  if (names_.size() != roles_.size()) {
    throw precondition_error("variable and role counts differ");
  }
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) {
      throw precondition_error("invalid variable name '" + n + "'");
    }
    if (!seen.insert(n).second) {
      throw precondition_error("duplicate variable '" + n + "'");
    }
  }
}

ContextPtr VarContext::make(std::vector<std::string> names, Role role) {
  std::vector<Role> roles(names.size(), role);
  return std::make_shared<const VarContext>(std::move(names), std::move(roles));
}

ContextPtr VarContext::make(std::vector<std::pair<std::string, Role>> vars) {
  std::vector<std::string> names;
  std::vector<Role> roles;
  for (auto& [n, r] : vars) {
    names.push_back(std::move(n));
    roles.push_back(r);
  }
  return std::make_shared<const VarContext>(std::move(names), std::move(roles));
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::size_t VarContext::require(std::string_view name) const {
  if (auto i = index_of(name)) {
    return *i;
  }
  throw unknown_variable(std::string(name));
}

// ---------------------------------------------------------------------------
// Monomial

unsigned Monomial::degree() const noexcept {
  return std::accumulate(exps.begin(), exps.end(), 0u);
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > other.exps[i]) {
      return false;
    }
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    r.exps[i] = exps[i] + o.exps[i];
  }
  return r;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) {
    return da > db;
  }
  return a.exps > b.exps;
}

std::string to_string(const Monomial& m, const VarContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m.exps[i] == 0) {
      continue;
    }
    if (!out.empty()) {
      out += '*';
    }
    out += ctx.name(i);
    if (m.exps[i] > 1) {
      out += '^' + std::to_string(m.exps[i]);
    }
  }
  return out.empty() ? "1" : out;
}

namespace {

void enumerate(std::size_t nvars, unsigned remaining, std::size_t var, Monomial& cur,
               std::vector<Monomial>& out) {
  if (var == nvars) {
    out.push_back(cur);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    cur.exps[var] = e;
    enumerate(nvars, remaining - e, var + 1, cur, out);
  }
  cur.exps[var] = 0;
}

} // namespace

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  Monomial cur(nvars);
  enumerate(nvars, max_degree, 0, cur, out);
  std::sort(out.begin(), out.end(), GrlexGreater{});
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) {
    throw precondition_error("polynomial without a variable context");
  }
}

Polynomial::Polynomial(ContextPtr ctx, TermMap terms) : Polynomial(std::move(ctx)) {
  for (auto& [m, c] : terms) {
    if (m.size() != ctx_->size()) {
      throw context_mismatch("monomial length does not match context");
    }
    if (!germforge::is_zero(c)) {
      terms_.emplace(m, c);
    }
  }
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rat& c) {
  Polynomial p(ctx);
  p.add_term(Monomial(ctx->size()), c);
  return p;
}

Polynomial Polynomial::variable(ContextPtr ctx, std::string_view name) {
  const auto i = ctx->require(name);
  return variable(std::move(ctx), i);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  Monomial m(ctx->size());
  m.exps.at(index) = 1;
  return monomial(std::move(ctx), std::move(m));
}

Polynomial Polynomial::monomial(ContextPtr ctx, Monomial m, const Rat& c) {
  if (m.size() != ctx->size()) {
    throw context_mismatch("monomial length does not match context");
  }
  Polynomial p(std::move(ctx));
  p.add_term(m, c);
  return p;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree());
}

int Polynomial::order() const {
  return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree());
}

Rat Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Polynomial::constant_term() const { return coefficient(Monomial(ctx_->size())); }

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial out(ctx_);
  for (const auto& [m, c] : terms_) {
    if (m.degree() == d) {
      out.terms_.emplace_hint(out.terms_.end(), m, c);
    }
  }
  return out;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [index](const auto& t) { return t.first.exps[index] != 0; });
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
  if (germforge::is_zero(c)) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (germforge::is_zero(it->second)) {
      terms_.erase(it);
    }
  }
}

void require_same_context(const Polynomial& a, const Polynomial& b) {
  if (a.context_ptr() != b.context_ptr() && !(a.context() == b.context())) {
    throw context_mismatch("polynomials live in different variable contexts");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) {
    add_term(m, c);
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_context(*this, o);
  for (const auto& [m, c] : o.terms_) {
    add_term(m, -c);
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
  if (germforge::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) {
    v *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_context(a, b);
  Polynomial out(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) {
    c = -c;
  }
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ctx_, Rat(1));
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) {
      result = result * base;
    }
    e >>= 1u;
    if (e > 0) {
      base = base * base;
    }
  }
  return result;
}

Polynomial Polynomial::embed(ContextPtr target) const {
  std::vector<std::optional<std::size_t>> map(ctx_->size());
  for (std::size_t i = 0; i < ctx_->size(); ++i) {
    map[i] = target->index_of(ctx_->name(i));
  }
  Polynomial out(target);
  for (const auto& [m, c] : terms_) {
    Monomial nm(target->size());
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.exps[i] == 0) {
        continue;
      }
      if (!map[i]) {
        throw context_mismatch("variable '" + ctx_->name(i) + "' is not present in the target context");
      }
      nm.exps[*map[i]] = m.exps[i];
    }
    out.add_term(nm, c);
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!(a.context() == b.context())) {
    return false;
  }
  return a.terms_ == b.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat mag = abs(c);
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) {
        os << '-';
      }
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == 1);
    if (m.is_one()) {
      os << germforge::to_string(mag);
    } else if (unit) {
      os << germforge::to_string(m, *ctx_);
    } else {
      if (mag.get_den() != 1) {
        os << '(' << germforge::to_string(mag) << ')';
      } else {
        os << germforge::to_string(mag);
      }
      os << '*' << germforge::to_string(m, *ctx_);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, unsigned max_degree) {
  require_same_context(a, b);
  Polynomial out(a.context_ptr());
  for (const auto& [ma, ca] : a.terms()) {
    const auto da = ma.degree();
    if (da > max_degree) {
      continue;
    }
    // terms of b are ordered by descending degree; skip the too-large prefix
    for (auto it = b.terms().rbegin(); it != b.terms().rend(); ++it) {
      if (da + it->first.degree() > max_degree) {
        break;
      }
      out.add_term(ma * it->first, ca * it->second);
    }
  }
  return out;
}

Polynomial pow_truncated(const Polynomial& p, unsigned e, unsigned max_degree) {
  Polynomial result = Polynomial::constant(p.context_ptr(), Rat(1));
  Polynomial base = jet_truncate(p, max_degree);
  while (e > 0) {
    if (e & 1u) {
      result = mul_truncated(result, base, max_degree);
    }
    e >>= 1u;
    if (e > 0) {
      base = mul_truncated(base, base, max_degree);
    }
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings) {
  const auto& ctx = p.context();
  std::vector<Polynomial> images;
  images.reserve(ctx.size());
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    images.push_back(Polynomial::variable(p.context_ptr(), i));
  }
  for (const auto& [name, image] : bindings) {
    const auto idx = ctx.index_of(name);
    if (!idx) {
      throw context_mismatch("bound variable '" + name + "' is not in the polynomial's context");
    }
    if (!(image.context() == ctx)) {
      throw context_mismatch("binding for '" + name + "' lives in a different context");
    }
    images[*idx] = image;
  }
  return compose(p, images, p.context_ptr());
}

Polynomial compose(const Polynomial& p, std::span<const Polynomial> images, const ContextPtr& target,
                   std::optional<unsigned> max_degree) {
  const auto& ctx = p.context();
  if (images.size() != ctx.size()) {
    throw context_mismatch("composition needs one image per variable");
  }
  for (const auto& im : images) {
    if (!(im.context() == *target)) {
      throw context_mismatch("composition images must share the target context");
    }
  }
  // cache powers of each image
  std::vector<std::vector<Polynomial>> powers(ctx.size());
  auto power = [&](std::size_t var, unsigned e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, Rat(1)));
    }
    while (cache.size() <= e) {
      cache.push_back(max_degree ? mul_truncated(cache.back(), images[var], *max_degree)
                                 : cache.back() * images[var]);
    }
    return cache[e];
  };
  Polynomial out(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial term = Polynomial::constant(target, c);
    for (std::size_t i = 0; i < m.size() && !term.is_zero(); ++i) {
      if (m.exps[i] == 0) {
        continue;
      }
      const auto& pw = power(i, m.exps[i]);
      term = max_degree ? mul_truncated(term, pw, *max_degree) : term * pw;
    }
    out += term;
  }
  return out;
}

Polynomial derivative(const Polynomial& p, std::size_t var_index) {
  if (var_index >= p.context().size()) {
    throw context_mismatch("derivative variable out of range");
  }
  Polynomial out(p.context_ptr());
  for (const auto& [m, c] : p.terms()) {
    const auto e = m.exps[var_index];
    if (e == 0) {
      continue;
    }
    Monomial nm = m;
    nm.exps[var_index] = e - 1;
    out.add_term(nm, c * Rat(e));
  }
  return out;
}

std::vector<Polynomial> jacobian(const Polynomial& g, std::span<const std::string> vars) {
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    idx.push_back(g.context().require(v));
  }
  std::sort(idx.begin(), idx.end());
  std::vector<Polynomial> out;
  for (auto i : idx) {
    out.push_back(derivative(g, i));
  }
  return out;
}

std::vector<Polynomial> jacobian(const Polynomial& g) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < g.context().size(); ++i) {
    out.push_back(derivative(g, i));
  }
  return out;
}

Polynomial jet_truncate(const Polynomial& p, unsigned k) {
  Polynomial out(p.context_ptr());
  for (const auto& [m, c] : p.terms()) {
    if (m.degree() <= k) {
      out.add_term(m, c);
    }
  }
  return out;
}

Rat evaluate(const Polynomial& p, std::span<const Rat> point) {
  if (point.size() != p.context().size()) {
    throw context_mismatch("evaluation point has the wrong dimension");
  }
  Rat total(0);
  for (const auto& [m, c] : p.terms()) {
    Rat v = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::uint32_t e = 0; e < m.exps[i]; ++e) {
        v *= point[i];
      }
    }
    total += v;
  }
  return total;
}

void require_singular_at_origin(const Polynomial& g) {
  if (!is_zero(g.constant_term())) {
    throw precondition_error("function does not vanish at the origin: " + g.to_string());
  }
  if (!g.homogeneous_part(1).is_zero()) {
    throw non_singular_germ("function has a nonzero linear part: " + g.to_string());
  }
}

std::size_t hessian_corank_at_origin(const Polynomial& g) {
  require_singular_at_origin(g);
  const auto d = g.context().size();
  RatMatrix hess(d, d);
  const auto quadratic = g.homogeneous_part(2);
  for (const auto& [m, c] : quadratic.terms()) {
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < d; ++i) {
      for (std::uint32_t e = 0; e < m.exps[i]; ++e) {
        vars.push_back(i);
      }
    }
    if (vars[0] == vars[1]) {
      hess(vars[0], vars[0]) += 2 * c;
    } else {
      hess(vars[0], vars[1]) += c;
      hess(vars[1], vars[0]) += c;
    }
  }
  return d - hess.rank();
}

} // namespace germforge
