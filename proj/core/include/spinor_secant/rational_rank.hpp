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

// Opt-in cross-validation path: exact rank over Q of integer matrices.
// Used by the CLI --rational flag and by tests; never on the hot path.

#include <gmpxx.h>

#include <cstddef>
#include <vector>

#include "spinor_secant/dense_matrix.hpp"

namespace spinor_secant {

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  mpz_class& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpz_class& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  /// Entry-wise reduction into the ambient prime field.
  [[nodiscard]] DenseMatrix reduce() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> entries_;
};

[[nodiscard]] IntegerMatrix vstack(const std::vector<IntegerMatrix>& blocks);

/// Fraction-free (Bareiss) elimination. Every intermediate entry is a minor
/// of the input, so all divisions are exact.
[[nodiscard]] std::size_t rational_rank(const IntegerMatrix& m);

}  // namespace spinor_secant
