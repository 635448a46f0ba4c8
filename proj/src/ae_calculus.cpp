#include "germforge/ae_calculus.hpp"

#include "germforge/errors.hpp"
#include "germforge/local_algebra.hpp"
#include "germforge/quasihomog.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace germforge {

int VectorFieldAlongF::degree() const {
  int d = -1;
  for (const auto& c : components) {
    d = std::max(d, c.degree());
  }
  return d;
}

bool VectorFieldAlongF::is_zero() const {
  return std::all_of(components.begin(), components.end(), [](const Polynomial& c) { return c.is_zero(); });
}

std::string VectorFieldAlongF::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) {
      out += ", ";
    }
    out += components[i].to_string();
  }
  return out + ")";
}

namespace {

template <class F>
void run(Execution exec, std::int64_t n, F&& body) {
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) {
      body(i);
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      body(i);
    }
  }
}

SparseRow encode_components(std::span<const Polynomial> comps, const MonomialIndex& index) {
  const auto p = static_cast<std::uint32_t>(comps.size());
  std::vector<std::pair<std::uint32_t, Rat>> entries;
  for (std::uint32_t i = 0; i < p; ++i) {
    for (const auto& [m, c] : comps[i].terms()) {
      if (auto idx = index.index(m)) {
        entries.emplace_back(*idx * p + i, c);
      }
    }
  }
  return make_row(std::move(entries));
}

// f^b truncated at the index order, for every target monomial b. Each degree
// level only depends on the previous one.
std::vector<Polynomial> target_powers(std::span<const Polynomial> comps, const MonomialIndex& targets,
                                      const ContextPtr& source, Execution exec) {
  const unsigned k = targets.max_degree();
  std::vector<Polynomial> pw(targets.size(), Polynomial(source));
  std::vector<std::vector<std::size_t>> levels(k + 1);
  for (std::size_t i = 0; i < targets.size(); ++i) {
    levels[targets.monomial(i).degree()].push_back(i);
  }
  for (auto i : levels[0]) {
    pw[i] = Polynomial::constant(source, Rat(1));
  }
  for (unsigned d = 1; d <= k; ++d) {
    const auto& level = levels[d];
    run(exec, static_cast<std::int64_t>(level.size()), [&](std::int64_t j) {
      const auto i = level[static_cast<std::size_t>(j)];
      auto b = targets.monomial(i);
      std::size_t l = 0;
      while (b.exps[l] == 0) {
        ++l;
      }
      --b.exps[l];
      pw[i] = mul_truncated(pw[*targets.index(b)], comps[l], k);
    });
  }
  return pw;
}

} // namespace

namespace {

struct RowSpec {
  bool omega = true;           ///< wf(Y^b e_i) for every target monomial b
  unsigned module_power = 0;   ///< x^a f^b e_i with |b| = module_power, when positive
};

std::vector<SparseRow> assemble_rows(const MapGerm& f, const MonomialIndex& index, RowSpec spec, Execution exec) {
  const unsigned k = index.max_degree();
  const auto n = f.n();
  const auto p = f.p();
  const auto& src = f.source();

  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) {
    comps.push_back(jet_truncate(c, k));
  }
  // df[j][i] = d f_i / d x_j
  std::vector<std::vector<Polynomial>> df(n);
  std::vector<int> df_order(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < p; ++i) {
      df[j].push_back(jet_truncate(derivative(f.component(i), j), k));
      const int o = df[j].back().order();
      if (o >= 0 && (df_order[j] < 0 || o < df_order[j])) {
        df_order[j] = o;
      }
    }
  }

  struct Job {
    std::size_t a;   // source monomial
    std::size_t var; // tf: source variable; module: target monomial
  };
  std::vector<Job> tf_jobs;
  for (std::size_t j = 0; j < n; ++j) {
    if (df_order[j] < 0) {
      continue;
    }
    for (std::size_t a = 0; a < index.size(); ++a) {
      if (index.monomial(a).degree() + static_cast<unsigned>(df_order[j]) <= k) {
        tf_jobs.push_back({a, j});
      }
    }
  }

  const MonomialIndex targets(p, k);
  std::vector<Polynomial> powers;
  if (spec.omega || (spec.module_power > 0 && spec.module_power <= k)) {
    powers = target_powers(comps, targets, src, exec);
  }
  std::vector<std::size_t> wf_sources;
  std::vector<Job> module_jobs;
  for (std::size_t b = 0; b < powers.size(); ++b) {
    if (powers[b].is_zero()) {
      continue;
    }
    if (spec.omega) {
      wf_sources.push_back(b);
    }
    if (spec.module_power > 0 && targets.monomial(b).degree() == spec.module_power) {
      const auto ord = static_cast<unsigned>(powers[b].order());
      for (std::size_t a = 0; a < index.size(); ++a) {
        if (index.monomial(a).degree() + ord <= k) {
          module_jobs.push_back({a, b});
        }
      }
    }
  }

  const auto n_tf = tf_jobs.size();
  const auto n_wf = wf_sources.size() * p;
  std::vector<SparseRow> rows(n_tf + n_wf + module_jobs.size() * p);
  run(exec, static_cast<std::int64_t>(n_tf), [&](std::int64_t r) {
    const auto& job = tf_jobs[static_cast<std::size_t>(r)];
    const auto mono = Polynomial::monomial(src, index.monomial(job.a));
    std::vector<Polynomial> v;
    v.reserve(p);
    for (std::size_t i = 0; i < p; ++i) {
      v.push_back(mul_truncated(mono, df[job.var][i], k));
    }
    rows[static_cast<std::size_t>(r)] = encode_components(v, index);
  });
  run(exec, static_cast<std::int64_t>(wf_sources.size()), [&](std::int64_t s) {
    const auto b = wf_sources[static_cast<std::size_t>(s)];
    std::vector<Polynomial> v(p, Polynomial(src));
    for (std::size_t i = 0; i < p; ++i) {
      v[i] = powers[b];
      rows[n_tf + static_cast<std::size_t>(s) * p + i] = encode_components(v, index);
      v[i] = Polynomial(src);
    }
  });
  run(exec, static_cast<std::int64_t>(module_jobs.size()), [&](std::int64_t s) {
    const auto& job = module_jobs[static_cast<std::size_t>(s)];
    const auto mono = Polynomial::monomial(src, index.monomial(job.a));
    const auto product = mul_truncated(mono, powers[job.var], k);
    std::vector<Polynomial> v(p, Polynomial(src));
    for (std::size_t i = 0; i < p; ++i) {
      v[i] = product;
      rows[n_tf + n_wf + static_cast<std::size_t>(s) * p + i] = encode_components(v, index);
      v[i] = Polynomial(src);
    }
  });
  std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
  return rows;
}

} // namespace

std::vector<SparseRow> tangent_rows(const MapGerm& f, const MonomialIndex& index, Execution exec) {
  return assemble_rows(f, index, RowSpec{}, exec);
}

namespace {

// Weighted degree of the monomial field x^a e_i: wdeg(a) - D_i.
std::vector<long> column_degrees(const MapWeights& weights, const MonomialIndex& index, std::size_t p) {
  std::vector<long> out(index.size() * p);
  for (std::size_t a = 0; a < index.size(); ++a) {
    long wd = 0;
    const auto& m = index.monomial(a);
    for (std::size_t j = 0; j < m.size(); ++j) {
      wd += weights.source[j] * static_cast<long>(m.exps[j]);
    }
    for (std::size_t i = 0; i < p; ++i) {
      out[a * p + i] = wd - weights.target[i];
    }
  }
  return out;
}

// Splits rows by the weighted degree of theta(f) induced by a quasihomogeneous
// structure. Returns nothing if some row mixes degrees.
std::optional<std::vector<std::vector<SparseRow>>> graded_blocks(const MapGerm& f, const MonomialIndex& index,
                                                                 std::vector<SparseRow>& rows) {
  const auto weights = find_map_weights(f.components());
  if (!weights) {
    return std::nullopt;
  }
  const auto column_degree = column_degrees(*weights, index, f.p());
  std::map<long, std::size_t> block_of;
  for (auto d : column_degree) {
    block_of.emplace(d, 0);
  }
  std::size_t next = 0;
  for (auto& [d, b] : block_of) {
    b = next++;
  }
  for (const auto& row : rows) {
    const long d = column_degree[row.lead()];
    for (const auto& [c, v] : row.entries) {
      if (column_degree[c] != d) {
        return std::nullopt;
      }
    }
  }
  std::vector<std::vector<SparseRow>> blocks(block_of.size());
  for (auto& row : rows) {
    blocks[block_of[column_degree[row.lead()]]].push_back(std::move(row));
  }
  return blocks;
}

EchelonBasis reduce_rows(const MapGerm& f, const MonomialIndex& index, std::vector<SparseRow> rows,
                         JetOptions options, bool& graded) {
  const auto columns = index.size() * f.p();
  std::optional<std::vector<std::vector<SparseRow>>> blocks;
  if (options.use_grading) {
    blocks = graded_blocks(f, index, rows);
  }
  graded = blocks.has_value();
  if (blocks) {
    return echelon_blocks(std::move(*blocks), columns, options.exec);
  }
  return echelon(std::move(rows), columns, options.exec);
}

struct Reduced {
  MonomialIndex index;
  EchelonBasis basis;
  std::size_t dimension() const { return basis.columns() - basis.rank(); }
};

Reduced reduce_spec(const MapGerm& f, unsigned k, RowSpec spec, JetOptions options) {
  MonomialIndex index(f.n(), k);
  bool graded = false;
  auto basis = reduce_rows(f, index, assemble_rows(f, index, spec, options.exec), options, graded);
  return {std::move(index), std::move(basis)};
}

std::size_t quotient_dimension(const MapGerm& f, unsigned k, RowSpec spec, JetOptions options) {
  return reduce_spec(f, k, spec, options).dimension();
}

} // namespace

JetModel::JetModel(const MapGerm& f, unsigned order, JetOptions options)
    : f_(f), order_(order), index_(f.n(), order), image_(index_.size() * f.p()) {
  if (f.p() == 0) {
    throw precondition_error("map germ has no components");
  }
  for (const auto& c : f.components()) {
    if (!is_zero(c.constant_term())) {
      throw precondition_error("map germ does not send 0 to 0");
    }
  }
  image_ = reduce_rows(f_, index_, tangent_rows(f_, index_, options.exec), options, graded_);

  const auto p = f_.p();
  auto free_cols = image_.non_pivot_columns();
  std::sort(free_cols.begin(), free_cols.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto da = index_.monomial(a / p).degree();
    const auto db = index_.monomial(b / p).degree();
    if (da != db) {
      return da < db;
    }
    if (a / p != b / p) {
      return a / p > b / p;
    }
    return a % p < b % p;
  });
  for (auto c : free_cols) {
    normal_basis_.push_back(decode(make_row({{c, Rat(1)}})));
  }
}

SparseRow JetModel::encode(const VectorFieldAlongF& v) const {
  if (v.components.size() != f_.p()) {
    throw context_mismatch("field has " + std::to_string(v.components.size()) + " components, germ has " +
                           std::to_string(f_.p()));
  }
  std::vector<Polynomial> comps;
  for (const auto& c : v.components) {
    if (!(c.context() == *f_.source())) {
      throw context_mismatch("field lives in a different context");
    }
    comps.push_back(jet_truncate(c, order_));
  }
  return encode_components(comps, index_);
}

VectorFieldAlongF JetModel::decode(const SparseRow& row) const {
  const auto p = f_.p();
  VectorFieldAlongF v;
  v.components.assign(p, Polynomial(f_.source()));
  for (const auto& [c, x] : row.entries) {
    v.components[c % p].add_term(index_.monomial(c / p), x);
  }
  return v;
}

bool JetModel::in_image(const VectorFieldAlongF& v) const { return image_.contains(encode(v)); }

std::size_t JetModel::quotient_rank(std::span<const VectorFieldAlongF> fields) const {
  std::vector<SparseRow> reduced;
  for (const auto& v : fields) {
    auto r = image_.reduce(encode(v));
    if (!r.empty()) {
      reduced.push_back(std::move(r));
    }
  }
  return echelon_serial(std::move(reduced), columns()).rank();
}

JetModel tangent_image(const MapGerm& f, unsigned k, JetOptions options) { return JetModel(f, k, options); }

namespace {

int module_certificate(const MapGerm& f, unsigned j, int start, int k_budget, JetOptions options) {
  const RowSpec spec{false, j};
  const int first = std::max(start, 1);
  auto previous = quotient_dimension(f, static_cast<unsigned>(first - 1), spec, options);
  for (int k = first; k <= k_budget; ++k) {
    const auto d = quotient_dimension(f, static_cast<unsigned>(k), spec, options);
    if (d == previous) {
      return k;
    }
    previous = d;
  }
  throw not_certified("tf(theta_n) + f^*m_p^" + std::to_string(j) + " theta(f) has no certified order",
                      k_budget);
}

} // namespace

FiltrationStep ae_filtration_quotient(const MapGerm& f, unsigned j, int k_budget, JetOptions options, int start) {
  if (j == 0) {
    throw precondition_error("filtration power must be positive");
  }
  const int order = module_certificate(f, j, start, k_budget, options);
  return {quotient_dimension(f, static_cast<unsigned>(order), RowSpec{true, j}, options), order};
}

namespace {

// Quasihomogeneous f: N = theta(f)/T A_e f is a graded O_p-module generated in
// the degrees of N/m_p N. Past the top generator degree, N_d is spanned by
// Y_i N_{d - D_i}, so a run of max(D_i) empty degrees ends it. Block d of the
// jet model is exact once every field of weighted degree d fits in the jet.
std::optional<AeCodimResult> graded_codim(const MapGerm& f, const MapWeights& weights, int k_budget,
                                          JetOptions options) {
  options.use_grading = true;
  const auto p = f.p();
  const long w_min = *std::min_element(weights.source.begin(), weights.source.end());
  const long d_max = *std::max_element(weights.target.begin(), weights.target.end());
  auto exact_up_to = [&](unsigned k) {
    // largest d whose fields all have total degree <= k
    long best = std::numeric_limits<long>::max();
    for (auto di : weights.target) {
      best = std::min(best, (static_cast<long>(k) + 1) * w_min - 1 - di);
    }
    return best;
  };

  const FiltrationStep first = ae_filtration_quotient(f, 1, k_budget, options);
  const auto generators = reduce_spec(f, static_cast<unsigned>(first.order), RowSpec{true, 1}, options);
  if (generators.dimension() == 0) {
    return AeCodimResult{0, {}, first.order, 1, "target-filtration"};
  }
  const auto gen_degrees = column_degrees(weights, generators.index, p);
  long top = std::numeric_limits<long>::min();
  for (auto c : generators.basis.non_pivot_columns()) {
    top = std::max(top, gen_degrees[c]);
  }

  for (int k = std::max(first.order, 1); k <= k_budget; ++k) {
    const long exact = exact_up_to(static_cast<unsigned>(k));
    if (exact < top + d_max) {
      continue;
    }
    const JetModel model(f, static_cast<unsigned>(k), options);
    const auto degrees = column_degrees(weights, MonomialIndex(f.n(), static_cast<unsigned>(k)), p);
    std::map<long, std::size_t> per_degree;
    for (auto c : model.image().non_pivot_columns()) {
      ++per_degree[degrees[c]];
    }
    auto empty_run = [&](long d0) {
      for (long d = d0; d < d0 + d_max; ++d) {
        if (per_degree.count(d)) {
          return false;
        }
      }
      return true;
    };
    for (long d0 = top + 1; d0 + d_max - 1 <= exact; ++d0) {
      if (!empty_run(d0)) {
        continue;
      }
      std::size_t codim = 0;
      for (const auto& [d, count] : per_degree) {
        if (d < d0) {
          codim += count;
        }
      }
      if (codim != model.codim()) {
        throw error("jet model has normal fields beyond the certified degree range");
      }
      return AeCodimResult{codim, model.normal_basis(), k, 0, "weighted-degree"};
    }
  }
  return std::nullopt;
}

AeCodimResult filtration_codim(const MapGerm& f, int k_budget, JetOptions options) {
  std::optional<FiltrationStep> previous;
  for (unsigned j = 1;; ++j) {
    const auto step = ae_filtration_quotient(f, j, k_budget, options, previous ? previous->order : 1);
    const bool done = step.dimension == 0 || (previous && previous->dimension == step.dimension);
    if (done) {
      const auto& exact = step.dimension == 0 ? step : *previous;
      const JetModel model(f, static_cast<unsigned>(exact.order), options);
      if (model.codim() != exact.dimension) {
        throw error("jet model disagrees with the certified A_e-codimension");
      }
      return {exact.dimension, model.normal_basis(), exact.order, step.dimension == 0 ? j : j - 1,
              "target-filtration"};
    }
    previous = step;
  }
}

} // namespace

AeCodimResult ae_codim(const MapGerm& f, int k_budget, JetOptions options) {
  try {
    quotient_dim(f.components(), f.source(), default_quotient_order, options.exec);
  } catch (const not_certified&) {
    throw not_certified("map germ is not finite", default_quotient_order);
  }
  if (options.use_grading) {
    if (const auto weights = find_map_weights(f.components())) {
      if (auto r = graded_codim(f, *weights, k_budget, options)) {
        return std::move(*r);
      }
    }
  }
  return filtration_codim(f, k_budget, options);
}

std::vector<VectorFieldAlongF> initial_speeds(const Unfolding& unfolding) {
  std::vector<VectorFieldAlongF> out;
  for (std::size_t s = 0; s < unfolding.m(); ++s) {
    out.push_back({initial_speed(unfolding, s)});
  }
  return out;
}

bool is_versal(const Unfolding& unfolding, int k_budget, JetOptions options) {
  const auto& f = unfolding.base();
  const auto r = ae_codim(f, k_budget, options);
  if (r.codim == 0) {
    return true;
  }
  const JetModel model(f, static_cast<unsigned>(r.certified_order), options);
  const auto speeds = initial_speeds(unfolding);
  return model.quotient_rank(speeds) == model.codim();
}

} // namespace germforge
