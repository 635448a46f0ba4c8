#include "germforge/dense.hpp"

#include "germforge/errors.hpp"

#include <utility>

namespace germforge {

std::vector<std::size_t> RatMatrix::rref() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t sel = row;
    while (sel < rows_ && is_zero((*this)(sel, col))) {
      ++sel;
    }
    if (sel == rows_) {
      continue;
    }
    if (sel != row) {
      for (std::size_t c = 0; c < cols_; ++c) {
        std::swap((*this)(sel, c), (*this)(row, c));
      }
    }
    const Rat inv = 1 / (*this)(row, col);
    for (std::size_t c = col; c < cols_; ++c) {
      (*this)(row, c) *= inv;
    }
    for (std::size_t r = 0; r < rows_; ++r) {
      if (r == row || is_zero((*this)(r, col))) {
        continue;
      }
      const Rat factor = (*this)(r, col);
      for (std::size_t c = col; c < cols_; ++c) {
        (*this)(r, c) -= factor * (*this)(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t RatMatrix::rank() const {
  RatMatrix copy = *this;
  return copy.rref().size();
}

Rat RatMatrix::determinant() const {
  if (rows_ != cols_) {
    throw precondition_error("determinant of a non-square matrix");
  }
  RatMatrix m = *this;
  Rat det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t sel = col;
    while (sel < rows_ && is_zero(m(sel, col))) {
      ++sel;
    }
    if (sel == rows_) {
      return Rat(0);
    }
    if (sel != col) {
      for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(m(sel, c), m(col, c));
      }
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (is_zero(m(r, col))) {
        continue;
      }
      const Rat factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < cols_; ++c) {
        m(r, c) -= factor * m(col, c);
      }
    }
  }
  return det;
}

std::vector<std::vector<Rat>> RatMatrix::nullspace() const {
  RatMatrix m = *this;
  const auto pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : pivots) {
    is_pivot[p] = true;
  }
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    std::vector<Rat> v(cols_);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = -m(i, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace germforge
