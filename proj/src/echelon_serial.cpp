#include "germforge/echelon.hpp"

#include "germforge/errors.hpp"

#include <algorithm>

namespace germforge {

const Rat* SparseRow::find(std::uint32_t col) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), col,
                             [](const auto& e, std::uint32_t c) { return e.first < c; });
  if (it == entries.end() || it->first != col) {
    return nullptr;
  }
  return &it->second;
}

Rat SparseRow::at(std::uint32_t col) const {
  const Rat* v = find(col);
  return v ? *v : Rat(0);
}

SparseRow make_row(std::vector<std::pair<std::uint32_t, Rat>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow row;
  for (auto& [c, v] : entries) {
    if (!row.entries.empty() && row.entries.back().first == c) {
      row.entries.back().second += v;
    } else {
      row.entries.emplace_back(c, std::move(v));
    }
  }
  std::erase_if(row.entries, [](const auto& e) { return is_zero(e.second); });
  return row;
}

void axpy(SparseRow& y, const Rat& a, const SparseRow& x) {
  if (is_zero(a) || x.empty()) {
    return;
  }
  std::vector<std::pair<std::uint32_t, Rat>> out;
  out.reserve(y.entries.size() + x.entries.size());
  auto iy = y.entries.begin();
  auto ix = x.entries.begin();
  while (iy != y.entries.end() || ix != x.entries.end()) {
    if (ix == x.entries.end() || (iy != y.entries.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy));
      ++iy;
    } else if (iy == y.entries.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Rat v = iy->second + a * ix->second;
      if (!is_zero(v)) {
        out.emplace_back(iy->first, std::move(v));
      }
      ++iy;
      ++ix;
    }
  }
  y.entries = std::move(out);
}

EchelonBasis::EchelonBasis(std::size_t columns) : columns_(columns), pivot_row_(columns, -1) {}

std::vector<std::uint32_t> EchelonBasis::non_pivot_columns() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < columns_; ++c) {
    if (pivot_row_[c] < 0) {
      out.push_back(c);
    }
  }
  return out;
}

SparseRow EchelonBasis::reduce(const SparseRow& v) const {
  SparseRow out = v;
  for (const auto& [c, a] : v.entries) {
    if (c >= columns_) {
      throw precondition_error("row entry outside the column range");
    }
    const auto r = pivot_row_[c];
    if (r >= 0) {
      // pivot rows vanish on every other pivot column, so the coefficient of c in
      // `out` is still the original one
      axpy(out, -a, rows_[static_cast<std::size_t>(r)]);
    }
  }
  return out;
}

bool EchelonBasis::insert(SparseRow v) {
  v = reduce(v);
  if (v.empty()) {
    return false;
  }
  const Rat inv = 1 / v.entries.front().second;
  for (auto& [c, a] : v.entries) {
    a *= inv;
  }
  const auto col = v.lead();
  for (auto& row : rows_) {
    if (const Rat* a = row.find(col)) {
      const Rat factor = *a;
      axpy(row, -factor, v);
    }
  }
  pivot_row_[col] = static_cast<std::int64_t>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

void EchelonBasis::adopt(std::vector<SparseRow> rref_rows) {
  for (auto& r : rref_rows) {
    if (r.empty()) {
      continue;
    }
    if (pivot_row_[r.lead()] >= 0) {
      throw precondition_error("adopted rows overlap existing pivots");
    }
    rows_.push_back(std::move(r));
  }
  canonicalize();
}

void EchelonBasis::canonicalize() {
  std::sort(rows_.begin(), rows_.end(), [](const SparseRow& a, const SparseRow& b) { return a.lead() < b.lead(); });
  std::fill(pivot_row_.begin(), pivot_row_.end(), -1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    pivot_row_[rows_[i].lead()] = static_cast<std::int64_t>(i);
  }
}

EchelonBasis echelon_serial(std::vector<SparseRow> rows, std::size_t columns) {
  EchelonBasis basis(columns);
  for (auto& r : rows) {
    basis.insert(std::move(r));
  }
  basis.canonicalize();
  return basis;
}

EchelonBasis echelon(std::vector<SparseRow> rows, std::size_t columns, Execution exec) {
  return exec == Execution::serial ? echelon_serial(std::move(rows), columns)
                                   : echelon_parallel(std::move(rows), columns);
}

} // namespace germforge
