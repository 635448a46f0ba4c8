#include "germforge/echelon.hpp"

#include <algorithm>
#include <limits>

#include <omp.h>

namespace germforge {

namespace {

void normalize(SparseRow& row) {
  const Rat inv = 1 / row.entries.front().second;
  for (auto& [c, a] : row.entries) {
    a *= inv;
  }
}

} // namespace

// Gauss-Jordan: repeatedly take the remaining row with the smallest leading
// column, clear that column from every other row in parallel.
EchelonBasis echelon_parallel(std::vector<SparseRow> rows, std::size_t columns) {
  std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
  std::vector<SparseRow> accepted;

  while (!rows.empty()) {
    const auto n = static_cast<std::int64_t>(rows.size());
    std::uint32_t best_col = std::numeric_limits<std::uint32_t>::max();
    std::int64_t best_idx = -1;
#pragma omp parallel
    {
      std::uint32_t local_col = std::numeric_limits<std::uint32_t>::max();
      std::int64_t local_idx = -1;
#pragma omp for nowait schedule(static)
      for (std::int64_t i = 0; i < n; ++i) {
        const auto lead = rows[static_cast<std::size_t>(i)].lead();
        if (lead < local_col || (lead == local_col && i < local_idx)) {
          local_col = lead;
          local_idx = i;
        }
      }
#pragma omp critical(germforge_pivot_select)
      {
        if (local_idx >= 0 && (local_col < best_col || (local_col == best_col && local_idx < best_idx))) {
          best_col = local_col;
          best_idx = local_idx;
        }
      }
    }

    SparseRow pivot = std::move(rows[static_cast<std::size_t>(best_idx)]);
    rows.erase(rows.begin() + best_idx);
    normalize(pivot);
    const auto col = pivot.lead();

    // every remaining row has lead >= col, so it contains col only as its lead
    const auto m = static_cast<std::int64_t>(rows.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < m; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      if (row.lead() == col) {
        const Rat factor = row.entries.front().second;
        axpy(row, -factor, pivot);
      }
    }
    const auto a = static_cast<std::int64_t>(accepted.size());
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t i = 0; i < a; ++i) {
      auto& row = accepted[static_cast<std::size_t>(i)];
      if (const Rat* v = row.find(col)) {
        const Rat factor = *v;
        axpy(row, -factor, pivot);
      }
    }
    std::erase_if(rows, [](const SparseRow& r) { return r.empty(); });
    accepted.push_back(std::move(pivot));
  }

  EchelonBasis basis(columns);
  basis.adopt(std::move(accepted));
  return basis;
}

EchelonBasis echelon_blocks(std::vector<std::vector<SparseRow>> blocks, std::size_t columns,
                            Execution exec) {
  std::vector<EchelonBasis> reduced(blocks.size(), EchelonBasis(0));
  const auto nb = static_cast<std::int64_t>(blocks.size());
  if (exec == Execution::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nb; ++b) {
      reduced[static_cast<std::size_t>(b)] = echelon_serial(std::move(blocks[static_cast<std::size_t>(b)]), columns);
    }
  } else {
    for (std::int64_t b = 0; b < nb; ++b) {
      reduced[static_cast<std::size_t>(b)] = echelon_serial(std::move(blocks[static_cast<std::size_t>(b)]), columns);
    }
  }
  EchelonBasis merged(columns);
  std::vector<SparseRow> all;
  for (auto& r : reduced) {
    for (const auto& row : r.rows()) {
      all.push_back(row);
    }
  }
  merged.adopt(std::move(all));
  return merged;
}

} // namespace germforge
