// Copyright 2026 The spinor_secant Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "spinor_secant/field.hpp"

namespace spinor_secant {

/// Row-major dense matrix over the ambient prime field.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  /// Throws kShapeMismatch unless entries.size() == rows * cols.
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Fp> entries);

  static DenseMatrix identity(std::size_t n);
  static DenseMatrix from_ints(std::size_t rows, std::size_t cols, std::span<const std::int64_t> values);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Fp& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
  Fp operator()(std::size_t r, std::size_t c) const noexcept { return entries_[r * cols_ + c]; }

  [[nodiscard]] std::span<Fp> row(std::size_t r) noexcept { return {entries_.data() + r * cols_, cols_}; }
  [[nodiscard]] std::span<const Fp> row(std::size_t r) const noexcept {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const Fp> entries() const noexcept { return entries_; }

  [[nodiscard]] DenseMatrix transpose() const;
  /// Copy of the block starting at (r0, c0).
  [[nodiscard]] DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b);

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(Fp s);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(DenseMatrix a, Fp s) { return a *= s; }
  friend DenseMatrix operator*(Fp s, DenseMatrix a) { return a *= s; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= -Fp::raw(1); }
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

  [[nodiscard]] bool is_zero() const noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fp> entries_;
};

/// Vertical concatenation; all blocks must share a column count.
[[nodiscard]] DenseMatrix vstack(std::span<const DenseMatrix> blocks);

/// Rank by row elimination on a private copy; pivots on the first nonzero entry of each column.
[[nodiscard]] std::size_t rank(const DenseMatrix& m);

/// cols - rank.
[[nodiscard]] std::size_t kernel_dimension(const DenseMatrix& m);

/// Throws kNonSquare for rectangular input.
[[nodiscard]] Fp determinant(const DenseMatrix& m);

/// Gauss-Jordan inverse; nullopt when singular. Throws kNonSquare.
[[nodiscard]] std::optional<DenseMatrix> inverse(const DenseMatrix& m);

}  // namespace spinor_secant
