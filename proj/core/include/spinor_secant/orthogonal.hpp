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
 * @file orthogonal.hpp
 * @brief SO(2h, Q) and so(2h, Q) in the hyperbolic basis e_1..e_h, f_1..f_h.
 *
 * The quadratic form has Gram matrix B = [[O, I/2], [I/2, O]]. A group
 * element g is kept as four h x h blocks and acts on the chart by
 *   [I | U]  ->  [I | (g11^t + U g12^t)^{-1} (g21^t + U g22^t)].
 * An algebra element H satisfies H^t B = -B H, i.e. H22 = -H11^t with H12
 * and H21 skew.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "spinor_secant/dense_matrix.hpp"
#include "spinor_secant/spinor.hpp"

namespace spinor_secant {

/// 2h x 2h Gram matrix [[O, I/2], [I/2, O]].
[[nodiscard]] DenseMatrix form_matrix(std::size_t h);

/// Any 2h x 2h matrix viewed through its four h x h blocks.
struct BlockMatrix {
  std::size_t h = 0;
  DenseMatrix b11, b12, b21, b22;

  static BlockMatrix from_full(const DenseMatrix& m);
  [[nodiscard]] DenseMatrix full() const;
};

class OrthogonalElement {
 public:
  /// Throws std::invalid_argument unless g^t B g = B.
  static OrthogonalElement from_blocks(BlockMatrix blocks);
  static OrthogonalElement identity(std::size_t h);

  [[nodiscard]] const BlockMatrix& blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::size_t h() const noexcept { return blocks_.h; }

  friend OrthogonalElement operator*(const OrthogonalElement& a, const OrthogonalElement& b);
  /// g^{-1} = B^{-1} g^t B.
  [[nodiscard]] OrthogonalElement inverse() const;

 private:
  OrthogonalElement() = default;
  BlockMatrix blocks_;
};

[[nodiscard]] bool preserves_form(const DenseMatrix& g);

class AlgebraElement {
 public:
  /// Throws std::invalid_argument unless H^t B = -B H.
  static AlgebraElement from_blocks(BlockMatrix blocks);

  [[nodiscard]] const BlockMatrix& blocks() const noexcept { return blocks_; }
  [[nodiscard]] std::size_t h() const noexcept { return blocks_.h; }

 private:
  AlgebraElement() = default;
  BlockMatrix blocks_;
};

[[nodiscard]] bool in_lie_algebra(const DenseMatrix& m);

/// Basis of so(2h): E_ab in H11 (with H22 = -E_ab^t) for all a, b; then
/// E_ab - E_ba in H12 for a < b; then the same in H21. Size h(2h-1).
[[nodiscard]] std::vector<AlgebraElement> so_basis(std::size_t h);

/// Raw chart formula for any block matrix; nullopt when the left factor is singular.
[[nodiscard]] std::optional<DenseMatrix> chart_transform(const BlockMatrix& g, const DenseMatrix& u);

/// Throws kChartSingular when g moves U off the chart.
[[nodiscard]] SkewMatrix act_on_chart(const OrthogonalElement& g, const SkewMatrix& u);

/// First-order term of the chart action of I + eps H at U:
///   A = H21^t + U H22^t - H11^t U - U H12^t U.
[[nodiscard]] SkewMatrix first_order_displacement(const AlgebraElement& h, const SkewMatrix& u);

/// Differential at the identity of g -> (g U1, g U2, g U3): rows indexed by
/// so_basis(h), columns by the 3p upper entries of the three displacements.
[[nodiscard]] DenseMatrix triple_differential(std::size_t h, const SkewMatrix& u1, const SkewMatrix& u2,
                                              const SkewMatrix& u3);
[[nodiscard]] std::size_t triple_differential_rank(std::size_t h, const SkewMatrix& u1, const SkewMatrix& u2,
                                                   const SkewMatrix& u3);

struct OrbitKernel {
  std::size_t via_differential = 0;  ///< dim so(2h) - rank of the triple differential
  std::size_t via_symmetry = 0;      ///< dim { A : J_m A symmetric }
};

/// Both kernel computations at the standard triple (O, J_m, -J_m). Throws kOddSize.
[[nodiscard]] OrbitKernel orbit_kernel_dimensions(std::size_t h);
/// The common value; throws std::logic_error if the two routes disagree.
[[nodiscard]] std::size_t orbit_kernel_dimension(std::size_t h);

/// Cayley transform (I - N/2)(I + N/2)^{-1} of an algebra element; nullopt
/// when I + N/2 is singular.
[[nodiscard]] std::optional<OrthogonalElement> cayley(const AlgebraElement& n);

/// Cayley image of a uniformly random combination of so_basis(h).
[[nodiscard]] OrthogonalElement random_orthogonal(std::size_t h, std::mt19937_64& rng);

}  // namespace spinor_secant
