#include "germforge/local_algebra.hpp"

#include "germforge/errors.hpp"
#include "germforge/jet_space.hpp"

#include <omp.h>

namespace germforge {

MonomialIndex::MonomialIndex(std::size_t nvars, unsigned max_degree)
    : max_degree_(max_degree), monomials_(monomials_up_to(nvars, max_degree)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    lookup_.emplace(monomials_[i], static_cast<std::uint32_t>(i));
  }
}

std::optional<std::uint32_t> MonomialIndex::index(const Monomial& m) const {
  auto it = lookup_.find(m);
  if (it == lookup_.end()) {
    return std::nullopt;
  }
  return it->second;
}

namespace {

SparseRow encode(const Polynomial& p, const MonomialIndex& index) {
  std::vector<std::pair<std::uint32_t, Rat>> entries;
  for (const auto& [m, c] : p.terms()) {
    if (auto i = index.index(m)) {
      entries.emplace_back(*i, c);
    }
  }
  return make_row(std::move(entries));
}

void check_generators(std::span<const Polynomial> generators, const ContextPtr& ctx) {
  for (const auto& g : generators) {
    if (!(g.context() == *ctx)) {
      throw context_mismatch("generator lives in a different context");
    }
    if (!is_zero(g.constant_term())) {
      throw precondition_error("generator " + g.to_string() + " does not vanish at the origin");
    }
  }
}

} // namespace

QuotientReport truncated_quotient(std::span<const Polynomial> generators, const ContextPtr& ctx, unsigned k,
                                  Execution exec) {
  check_generators(generators, ctx);
  const MonomialIndex index(ctx->size(), k);

  struct Job {
    std::size_t gen;
    std::size_t mono;
  };
  std::vector<Polynomial> truncated;
  std::vector<Job> jobs;
  for (std::size_t g = 0; g < generators.size(); ++g) {
    truncated.push_back(jet_truncate(generators[g], k));
    const int ord = truncated.back().order();
    if (ord < 0) {
      continue;
    }
    for (std::size_t m = 0; m < index.size(); ++m) {
      if (index.monomial(m).degree() + static_cast<unsigned>(ord) <= k) {
        jobs.push_back({g, m});
      }
    }
  }

  std::vector<SparseRow> rows(jobs.size());
  const auto nj = static_cast<std::int64_t>(jobs.size());
  auto build = [&](std::int64_t j) {
    const auto& job = jobs[static_cast<std::size_t>(j)];
    const auto mono = Polynomial::monomial(ctx, index.monomial(job.mono));
    rows[static_cast<std::size_t>(j)] = encode(mul_truncated(mono, truncated[job.gen], k), index);
  };
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (std::int64_t j = 0; j < nj; ++j) {
      build(j);
    }
  } else {
    for (std::int64_t j = 0; j < nj; ++j) {
      build(j);
    }
  }

  const auto basis = echelon(std::move(rows), index.size(), exec);
  QuotientReport report;
  for (auto c : basis.non_pivot_columns()) {
    report.monomial_basis.push_back(index.monomial(c));
  }
  report.dimension = report.monomial_basis.size();
  report.certificate_order = static_cast<int>(k);
  return report;
}

QuotientReport quotient_dim(std::span<const Polynomial> generators, const ContextPtr& ctx, int k_max,
                            Execution exec) {
  if (k_max < 2) {
    throw precondition_error("quotient_dim needs k_max >= 2");
  }
  check_generators(generators, ctx);
  std::size_t previous = 1; // dim O_d / m
  for (int k = 1; k <= k_max; ++k) {
    auto report = truncated_quotient(generators, ctx, static_cast<unsigned>(k), exec);
    if (report.dimension == previous) {
      return report;
    }
    previous = report.dimension;
  }
  throw not_certified("quotient dimension did not stabilize", k_max);
}

QuotientReport milnor(const Polynomial& g, int k_max) {
  require_singular_at_origin(g);
  const auto gens = jacobian(g);
  return quotient_dim(gens, g.context_ptr(), k_max);
}

QuotientReport tjurina(const Polynomial& g, int k_max) {
  require_singular_at_origin(g);
  auto gens = jacobian(g);
  gens.push_back(g);
  return quotient_dim(gens, g.context_ptr(), k_max);
}

std::vector<Monomial> quotient_monomial_basis(const Polynomial& g, int k_max) {
  return tjurina(g, k_max).monomial_basis;
}

} // namespace germforge
