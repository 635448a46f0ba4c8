#pragma once

#include "germforge/rational.hpp"

#include <cstddef>
#include <vector>

namespace germforge {

/// Small dense rational matrix for Hessians, weight systems and resultants.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  Rat determinant() const;
  /// Basis of {v : A v = 0}, one vector per free column of the RREF.
  std::vector<std::vector<Rat>> nullspace() const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

} // namespace germforge
