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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "spinor_secant/dense_matrix.hpp"
#include "spinor_secant/errors.hpp"
#include "spinor_secant/random.hpp"
#include "spinor_secant/rational_rank.hpp"
#include "test_support.hpp"

namespace spinor_secant {
namespace {

DenseMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  DenseMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = uniform_fp(rng);
  return m;
}

// Third row = first + second, all entries nonzero.
DenseMatrix dependent_3x3() {
  const std::vector<std::int64_t> v = {3, 7, 11, 5, 2, 13, 8, 9, 24};
  return DenseMatrix::from_ints(3, 3, v);
}

TEST(FieldTest, MersenneArithmetic) {
  const Fp a = Fp::from_int(-1);
  EXPECT_EQ(a.value(), kMersenne61 - 1);
  EXPECT_EQ(a + Fp::raw(1), Fp{});
  EXPECT_EQ(a * a, Fp::raw(1));
  EXPECT_EQ(Fp::raw(2).inverse() * Fp::raw(2), Fp::raw(1));
  EXPECT_EQ(Fp::raw(3).pow(kMersenne61 - 1), Fp::raw(1));
  EXPECT_THROW((void)Fp{}.inverse(), std::domain_error);
}

TEST(FieldTest, ModulusScopeRestores) {
  const std::uint64_t other = 1099511627791ULL;  // prime just above 2^40
  ASSERT_TRUE(is_valid_modulus(other));
  {
    ModulusScope scope(other);
    EXPECT_EQ(current_modulus(), other);
    EXPECT_EQ(Fp::from_int(-1).value(), other - 1);
  }
  EXPECT_EQ(current_modulus(), kMersenne61);
}

TEST(FieldTest, RejectsBadModulus) {
  EXPECT_FALSE(is_valid_modulus(1000003));              // too small
  EXPECT_FALSE(is_valid_modulus(kMersenne61 + 2));      // composite
  EXPECT_ERROR_CODE(ModulusScope scope(kMersenne61 - 1), ErrorCode::kInvalidModulus);
  EXPECT_ERROR_CODE(ModulusScope scope(15), ErrorCode::kInvalidModulus);
}

TEST(RankTest, Identity) {
  EXPECT_EQ(rank(DenseMatrix::identity(5)), 5U);
  EXPECT_EQ(kernel_dimension(DenseMatrix::identity(5)), 0U);
}

TEST(RankTest, Zero) {
  EXPECT_EQ(rank(DenseMatrix(4, 7)), 0U);
  EXPECT_EQ(kernel_dimension(DenseMatrix(4, 7)), 7U);
}

TEST(RankTest, DependentRowsAgainstMinors) {
  const DenseMatrix m = dependent_3x3();
  EXPECT_EQ(oracle::minor_rank(m), 2U);
  EXPECT_TRUE(oracle::cofactor_determinant(m).is_zero());
  EXPECT_EQ(rank(m), 2U);
  EXPECT_EQ(kernel_dimension(m), 1U);
}

TEST(RankTest, MatchesMinorOracleOnSmallRandom) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 1 + rng() % 4;
    const std::size_t cols = 1 + rng() % 4;
    DenseMatrix m = random_matrix(rows, cols, rng);
    // Force some dependencies.
    if (rows >= 2 && t % 2 == 0)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Fp::raw(5);
    EXPECT_EQ(rank(m), oracle::minor_rank(m));
  }
}

TEST(RankTest, BoundedByShape) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 50; ++t) {
    const std::size_t rows = 1 + rng() % 9;
    const std::size_t cols = 1 + rng() % 9;
    const DenseMatrix m = random_matrix(rows, cols, rng);
    const std::size_t r = rank(m);
    EXPECT_LE(r, std::min(rows, cols));
    EXPECT_EQ(r + kernel_dimension(m), cols);
  }
}

TEST(RankTest, PermutationInvariant) {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 30; ++t) {
    const std::size_t rows = 3 + rng() % 6;
    const std::size_t cols = 3 + rng() % 6;
    // Low-rank product so the rank is not simply min(rows, cols).
    const std::size_t inner = 1 + rng() % 3;
    const DenseMatrix m = random_matrix(rows, inner, rng) * random_matrix(inner, cols, rng);
    std::vector<std::size_t> rp(rows), cp(cols);
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    DenseMatrix shuffled(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) shuffled(r, c) = m(rp[r], cp[c]);
    EXPECT_EQ(rank(m), inner);
    EXPECT_EQ(rank(shuffled), rank(m));
  }
}

TEST(DeterminantTest, SmallCases) {
  EXPECT_EQ(determinant(DenseMatrix::identity(6)), Fp::raw(1));
  const std::vector<std::int64_t> diag = {2, 0, 0, 0, 3, 0, 0, 0, 4};
  EXPECT_EQ(determinant(DenseMatrix::from_ints(3, 3, diag)), Fp::raw(24));
  EXPECT_TRUE(determinant(dependent_3x3()).is_zero());
}

TEST(DeterminantTest, MatchesCofactorOracle) {
  std::mt19937_64 rng(14);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      const DenseMatrix m = random_matrix(n, n, rng);
      EXPECT_EQ(determinant(m), oracle::cofactor_determinant(m));
    }
}

TEST(DeterminantTest, OddSkewIsZero) {
  std::mt19937_64 rng(15);
  for (std::size_t n : {3, 5, 7})
    for (int t = 0; t < 10; ++t) EXPECT_TRUE(determinant(random_skew(n, rng).to_dense()).is_zero());
}

TEST(DeterminantTest, NonSquareThrows) {
  EXPECT_ERROR_CODE((void)determinant(DenseMatrix(2, 3)), ErrorCode::kNonSquare);
}

TEST(InverseTest, RoundTrip) {
  std::mt19937_64 rng(16);
  const DenseMatrix m = random_matrix(7, 7, rng);
  const auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, DenseMatrix::identity(7));
  EXPECT_FALSE(inverse(dependent_3x3()).has_value());
}

TEST(MatrixTest, VstackAndBlocks) {
  const DenseMatrix a = DenseMatrix::identity(2);
  const DenseMatrix b = dependent_3x3().block(0, 0, 1, 2);
  const std::vector<DenseMatrix> parts = {a, b};
  const DenseMatrix s = vstack(parts);
  EXPECT_EQ(s.rows(), 3U);
  EXPECT_EQ(s.block(2, 0, 1, 2), b);
  EXPECT_EQ(a.transpose(), a);
}

IntegerMatrix to_integer(const std::vector<std::int64_t>& v, std::size_t rows, std::size_t cols) {
  IntegerMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(v[r * cols + c]);
  return m;
}

TEST(RationalRankTest, AgreesOnGoldenMatrices) {
  const std::vector<std::int64_t> dep = {3, 7, 11, 5, 2, 13, 8, 9, 24};
  const std::vector<std::int64_t> id = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  const std::vector<std::int64_t> zero(12, 0);
  const std::vector<std::int64_t> wide = {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1};
  const struct {
    std::vector<std::int64_t> values;
    std::size_t rows, cols, expected;
  } golden[] = {{dep, 3, 3, 2}, {id, 3, 3, 3}, {zero, 3, 4, 0}, {wide, 3, 4, 2}};
  for (const auto& g : golden) {
    const IntegerMatrix m = to_integer(g.values, g.rows, g.cols);
    EXPECT_EQ(rational_rank(m), g.expected);
    EXPECT_EQ(rank(m.reduce()), g.expected);
  }
}

TEST(RationalRankTest, ModularRankCanDropBelowRational) {
  // det = P over Q, so the matrix is singular only mod P.
  IntegerMatrix m(2, 2);
  m(0, 0) = mpz_class("2305843009213693951");
  m(0, 1) = 0;
  m(1, 0) = 0;
  m(1, 1) = 1;
  EXPECT_EQ(rational_rank(m), 2U);
  EXPECT_EQ(rank(m.reduce()), 1U);
}

TEST(RationalRankTest, RandomIntegerMatricesAgree) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int t = 0; t < 20; ++t) {
    const std::size_t rows = 2 + rng() % 6;
    const std::size_t cols = 2 + rng() % 6;
    IntegerMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = dist(rng);
    if (rows > 2)
      for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) - 3 * m(1, c);
    EXPECT_EQ(rational_rank(m), rank(m.reduce()));
  }
}

}  // namespace
}  // namespace spinor_secant
