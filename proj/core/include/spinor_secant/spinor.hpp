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

/**
 * @file spinor.hpp
 * @brief Pfaffian parametrization of the even spinor variety S_h.
 *
 * A point of S_h in the standard affine chart is [I_h | U] with U skew.
 * Its coordinates in P^{2^{h-1}-1} are the principal sub-Pfaffians Pf_K(U)
 * for every even subset K of {1..h}. The coordinate vector is indexed by K
 * itself (not by the complement that labels the Clifford basis element);
 * every rank computation is invariant under that relabelling.
 *
 * Indices in this API are 0-based: position i in code is row/column i+1 in
 * the usual mathematical notation.
 */

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "spinor_secant/dense_matrix.hpp"
#include "spinor_secant/detail/pfaffian_table.hpp"

namespace spinor_secant {

/// Upper bound on h accepted anywhere in the library (2^23 coordinates).
inline constexpr std::size_t kMaxSpinorSize = 24;

/// Number of chart variables p = h(h-1)/2.
[[nodiscard]] constexpr std::size_t chart_dimension(std::size_t h) noexcept { return h * (h - 1) / 2; }
/// Number of spinor coordinates 2^{h-1}.
[[nodiscard]] constexpr std::size_t spinor_length(std::size_t h) noexcept {
  return h == 0 ? 1 : std::size_t{1} << (h - 1);
}

/// Strictly upper-triangular storage of an h x h skew-symmetric matrix.
/// Entries u_{ij}, i < j, are stored row-major: (0,1),(0,2),...,(0,h-1),(1,2),...
class SkewMatrix {
 public:
  SkewMatrix() = default;
  explicit SkewMatrix(std::size_t h) : h_(h), upper_(chart_dimension(h)) {}
  /// Throws kShapeMismatch unless upper.size() == h(h-1)/2.
  SkewMatrix(std::size_t h, std::vector<Fp> upper);

  static SkewMatrix zero(std::size_t h) { return SkewMatrix(h); }
  /// Block diagonal with blocks [[0, t_b], [-t_b, 0]] on positions (2b, 2b+1).
  static SkewMatrix block_diagonal(std::size_t h, std::span<const std::int64_t> block_values);
  /// J_m: m = h/2 blocks [[0,1],[-1,0]]. Throws kOddSize for odd h.
  static SkewMatrix standard_symplectic(std::size_t h);
  /// Throws kNotSkew unless d is square with d^t = -d.
  static SkewMatrix from_dense(const DenseMatrix& d);

  [[nodiscard]] std::size_t size() const noexcept { return h_; }
  [[nodiscard]] std::span<const Fp> upper() const noexcept { return upper_; }

  /// Position of u_{ij} (i < j) in upper().
  [[nodiscard]] static std::size_t pair_index(std::size_t h, std::size_t i, std::size_t j) noexcept {
    return i * (2 * h - i - 1) / 2 + (j - i - 1);
  }

  /// Entry (i, j) with the skew convention applied; diagonal reads 0.
  [[nodiscard]] Fp at(std::size_t i, std::size_t j) const;
  /// Sets u_{ij} and implicitly u_{ji} = -value. Throws kBadIndex unless i < j < h.
  void set(std::size_t i, std::size_t j, Fp value);

  [[nodiscard]] DenseMatrix to_dense() const;
  /// Principal submatrix on the sorted positions.
  [[nodiscard]] SkewMatrix principal(std::span<const std::size_t> positions) const;
  /// Zero-padded embedding into size n >= h (top-left block).
  [[nodiscard]] SkewMatrix padded(std::size_t n) const;

  friend SkewMatrix operator*(Fp s, SkewMatrix u) {
    for (Fp& x : u.upper_) x *= s;
    return u;
  }
  friend SkewMatrix operator-(SkewMatrix u) { return -Fp::raw(1) * std::move(u); }
  friend bool operator==(const SkewMatrix&, const SkewMatrix&) = default;

 private:
  std::size_t h_ = 0;
  std::vector<Fp> upper_;
};

/// A subset of {0..h-1} of even cardinality, as a bitmask (bit i = position i).
class EvenSubset {
 public:
  constexpr EvenSubset() = default;
  /// Throws kBadIndex for odd popcount.
  static EvenSubset from_mask(std::uint32_t mask);
  static EvenSubset from_positions(std::span<const std::size_t> positions);

  [[nodiscard]] constexpr std::uint32_t mask() const noexcept { return mask_; }
  [[nodiscard]] std::size_t cardinality() const noexcept;
  [[nodiscard]] bool contains(std::size_t i) const noexcept { return (mask_ >> i) & 1U; }
  [[nodiscard]] std::vector<std::size_t> positions() const;

  friend constexpr bool operator==(EvenSubset, EvenSubset) = default;

 private:
  std::uint32_t mask_ = 0;
};

/// All 2^{h-1} even subsets: by cardinality, then lexicographic on sorted positions.
/// Throws kSizeOutOfRange unless 1 <= h <= kMaxSpinorSize.
[[nodiscard]] std::vector<EvenSubset> enumerate_even_subsets(std::size_t h);

/// Rank of each mask in the canonical order (size 2^h; odd masks map to npos).
[[nodiscard]] std::vector<std::size_t> canonical_positions(std::size_t h);

struct SpinorPoint {
  std::size_t h = 0;
  std::vector<Fp> coords;  ///< canonical order, coords[0] = Pf_empty
};

/// Pf(U); 0 for odd h. Sign convention Pf([[0,a],[-a,0]]) = a.
[[nodiscard]] Fp pfaffian(const SkewMatrix& u);

/// Pf of the principal submatrix on K; 1 for the empty set.
[[nodiscard]] Fp sub_pfaffian(const SkewMatrix& u, EvenSubset k);

/// Every Pf_K(U) in canonical order, sharing one memo table over subsets.
[[nodiscard]] SpinorPoint spinor_coordinates(const SkewMatrix& u);

/// d Pf_K / d u_{ij} as the signed cofactor (-1)^{a+b+1} Pf_{K \ {i,j}}, where
/// a < b are the ranks of i and j inside K. Throws kBadIndex unless i < j < h.
[[nodiscard]] Fp pfaffian_partial(const SkewMatrix& u, EvenSubset k, std::size_t i, std::size_t j);

/// p x 2^{h-1}: row (i,j) in SkewMatrix storage order, column K in canonical order.
[[nodiscard]] DenseMatrix jacobian(const SkewMatrix& u);

}  // namespace spinor_secant
