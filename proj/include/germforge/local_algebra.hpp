#pragma once

// Dimensions and monomial bases of local-algebra quotients O_d / I.
//
// With D(k) = dim O_d / (I + m^{k+1}) computed by truncated linear algebra,
// D(k) == D(k-1) means m^k is contained in I + m^{k+1}, hence in I by Nakayama,
// and then dim O_d / I = D(k) exactly. No certificate within the budget raises
// not_certified; finiteness is certified, infinitude never claimed.

#include "germforge/echelon.hpp"
#include "germforge/poly.hpp"

#include <span>
#include <vector>

namespace germforge {

inline constexpr int default_quotient_order = 24;

struct QuotientReport {
  std::size_t dimension = 0;
  /// Standard monomials, descending graded-lex order (the constant 1 is last).
  std::vector<Monomial> monomial_basis;
  int certificate_order = 0;
};

/// dim O_d / (I + m^{k+1}) and its standard monomials at one jet order.
QuotientReport truncated_quotient(std::span<const Polynomial> generators, const ContextPtr& ctx, unsigned k,
                                  Execution exec = Execution::parallel);

QuotientReport quotient_dim(std::span<const Polynomial> generators, const ContextPtr& ctx,
                            int k_max = default_quotient_order, Execution exec = Execution::parallel);

/// mu(g) = dim O_d / Jg.
QuotientReport milnor(const Polynomial& g, int k_max = default_quotient_order);
/// tau(g) = dim O_d / (g + Jg).
QuotientReport tjurina(const Polynomial& g, int k_max = default_quotient_order);
/// Monomial basis of O_d / (g + Jg) with the constant monomial last.
std::vector<Monomial> quotient_monomial_basis(const Polynomial& g, int k_max = default_quotient_order);

} // namespace germforge
