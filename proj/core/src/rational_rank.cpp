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

#include "spinor_secant/rational_rank.hpp"

#include <utility>

#include "spinor_secant/errors.hpp"

namespace spinor_secant {

DenseMatrix IntegerMatrix::reduce() const {
  const mpz_class p(static_cast<unsigned long>(current_modulus()));
  DenseMatrix out(rows_, cols_);
  mpz_class r;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) {
      mpz_fdiv_r(r.get_mpz_t(), (*this)(i, j).get_mpz_t(), p.get_mpz_t());
      out(i, j) = Fp::raw(r.get_ui());
    }
  return out;
}

IntegerMatrix vstack(const std::vector<IntegerMatrix>& blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::kShapeMismatch, "vstack column counts differ");
    rows += b.rows();
  }
  IntegerMatrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r0 + r, c) = b(r, c);
    r0 += b.rows();
  }
  return out;
}

std::size_t rational_rank(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(pivot, j));
    const mpz_class piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const mpz_class lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * a(i, j) - lead * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = piv;
    ++r;
  }
  return r;
}

}  // namespace spinor_secant
