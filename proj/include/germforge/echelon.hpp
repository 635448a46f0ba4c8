#pragma once

// Exact sparse row reduction over the rationals. Column 0 has the highest pivot
// priority. Two kernels produce the reduced row echelon form: a serial
// incremental reference and an OpenMP Gauss-Jordan variant. The RREF of a row
// space is unique, so both must return identical bases.

#include "germforge/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace germforge {

enum class Execution { serial, parallel };

struct SparseRow {
  /// Sorted by column, no zero values.
  std::vector<std::pair<std::uint32_t, Rat>> entries;

  bool empty() const noexcept { return entries.empty(); }
  std::uint32_t lead() const { return entries.front().first; }
  /// Coefficient at `col`, or zero.
  Rat at(std::uint32_t col) const;
  const Rat* find(std::uint32_t col) const;

  bool operator==(const SparseRow&) const = default;
};

/// Builds a row from unsorted (column, value) pairs, merging duplicates.
SparseRow make_row(std::vector<std::pair<std::uint32_t, Rat>> entries);

/// y += a * x.
void axpy(SparseRow& y, const Rat& a, const SparseRow& x);

class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t columns);

  std::size_t columns() const noexcept { return columns_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  /// RREF rows with leading coefficient 1; ordered by pivot column after
  /// canonicalize() (the kernels below always return canonical bases).
  const std::vector<SparseRow>& rows() const noexcept { return rows_; }

  bool is_pivot(std::uint32_t col) const { return pivot_row_[col] >= 0; }
  std::vector<std::uint32_t> non_pivot_columns() const;

  /// Normal form of `v` modulo the row space: supported on non-pivot columns only.
  SparseRow reduce(const SparseRow& v) const;
  bool contains(const SparseRow& v) const { return reduce(v).empty(); }

  /// Incremental insertion keeping the basis fully reduced. Returns true when the
  /// rank grew. New rows are appended; call canonicalize() to restore the order.
  bool insert(SparseRow v);
  void canonicalize();

  /// Adopts rows already in RREF over columns disjoint from the current pivots.
  void adopt(std::vector<SparseRow> rref_rows);

  bool operator==(const EchelonBasis& o) const { return columns_ == o.columns_ && rows_ == o.rows_; }

private:
  std::size_t columns_;
  std::vector<SparseRow> rows_;
  std::vector<std::int64_t> pivot_row_;
};

EchelonBasis echelon_serial(std::vector<SparseRow> rows, std::size_t columns);
EchelonBasis echelon_parallel(std::vector<SparseRow> rows, std::size_t columns);
EchelonBasis echelon(std::vector<SparseRow> rows, std::size_t columns, Execution exec);

/// Rows grouped into blocks with pairwise disjoint column supports. Blocks are
/// reduced independently (concurrently under Execution::parallel) and merged.
EchelonBasis echelon_blocks(std::vector<std::vector<SparseRow>> blocks, std::size_t columns,
                            Execution exec);

} // namespace germforge
