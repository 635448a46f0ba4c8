#pragma once

#include "germforge/rational.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace germforge {

enum class Role { source, target, parameter, augmenting };

std::string_view role_name(Role r);

/// Ordered, named variables with roles. Shared immutably between polynomials.
class VarContext {
public:
  VarContext(std::vector<std::string> names, std::vector<Role> roles);

  static std::shared_ptr<const VarContext> make(std::vector<std::string> names,
                                                Role role = Role::source);
  static std::shared_ptr<const VarContext> make(std::vector<std::pair<std::string, Role>> vars);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  Role role(std::size_t i) const { return roles_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<Role>& roles() const noexcept { return roles_; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws unknown_variable.
  std::size_t require(std::string_view name) const;

  bool operator==(const VarContext&) const = default;

private:
  std::vector<std::string> names_;
  std::vector<Role> roles_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

bool is_identifier(std::string_view s);

/// Exponent vector; one slot per context variable.
struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t size() const noexcept { return exps.size(); }
  unsigned degree() const noexcept;
  bool is_one() const noexcept;
  bool divides(const Monomial& other) const;

  Monomial operator*(const Monomial& o) const;
  auto operator<=>(const Monomial&) const = default;
};

/// Graded-lexicographic comparison: true when a precedes b (higher degree first,
/// ties broken lexicographically with the first variable most significant).
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

std::string to_string(const Monomial& m, const VarContext& ctx);
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);

class Polynomial {
public:
  using TermMap = std::map<Monomial, Rat, GrlexGreater>;

  explicit Polynomial(ContextPtr ctx);
  Polynomial(ContextPtr ctx, TermMap terms);

  static Polynomial constant(ContextPtr ctx, const Rat& c);
  static Polynomial variable(ContextPtr ctx, std::string_view name);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial monomial(ContextPtr ctx, Monomial m, const Rat& c = Rat(1));

  const VarContext& context() const noexcept { return *ctx_; }
  const ContextPtr& context_ptr() const noexcept { return ctx_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Lowest total degree present; -1 for the zero polynomial.
  int order() const;
  Rat coefficient(const Monomial& m) const;
  Rat constant_term() const;
  Polynomial homogeneous_part(unsigned d) const;
  bool uses_variable(std::size_t index) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rat& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rat& c) { return a *= c; }
  friend Polynomial operator*(const Rat& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  Polynomial pow(unsigned e) const;

  /// Re-expresses the polynomial in another context, matching variables by name.
  /// Throws context_mismatch if a used variable is missing from `target`.
  Polynomial embed(ContextPtr target) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

  std::string to_string() const;

  /// Adds c*m in place; drops the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);

private:
  ContextPtr ctx_;
  TermMap terms_;
};

void require_same_context(const Polynomial& a, const Polynomial& b);

Polynomial mul_truncated(const Polynomial& a, const Polynomial& b, unsigned max_degree);
Polynomial pow_truncated(const Polynomial& p, unsigned e, unsigned max_degree);

Polynomial parse_poly(std::string_view text, ContextPtr ctx);

/// Variables in order of first appearance in the expression text.
std::vector<std::string> variables_in(std::string_view text);

/// Replaces bound variables by polynomials of the same context; unbound ones pass through.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& bindings);

/// General composition: variable i of p's context is replaced by images[i], which all
/// live in `target`. When `max_degree` is set, intermediate products are truncated.
Polynomial compose(const Polynomial& p, std::span<const Polynomial> images, const ContextPtr& target,
                   std::optional<unsigned> max_degree = std::nullopt);

Polynomial derivative(const Polynomial& p, std::size_t var_index);
/// One partial per listed variable, in context order.
std::vector<Polynomial> jacobian(const Polynomial& g, std::span<const std::string> vars);
std::vector<Polynomial> jacobian(const Polynomial& g);

Polynomial jet_truncate(const Polynomial& p, unsigned k);

/// Evaluates at rationals, one value per context variable.
Rat evaluate(const Polynomial& p, std::span<const Rat> point);

/// d - rank of the Hessian at 0. Throws non_singular_germ when the linear part is
/// nonzero and precondition_error when g(0) != 0.
std::size_t hessian_corank_at_origin(const Polynomial& g);

void require_singular_at_origin(const Polynomial& g);

} // namespace germforge
