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

#include "spinor_secant/orthogonal.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "spinor_secant/errors.hpp"
#include "spinor_secant/random.hpp"

namespace spinor_secant {

namespace {

Fp half() { return Fp::raw(2).inverse(); }

DenseMatrix elementary(std::size_t h, std::size_t a, std::size_t b) {
  DenseMatrix e(h, h);
  e(a, b) = Fp::raw(1);
  return e;
}

void require_skew_dense(const DenseMatrix& m, const char* what) {
  if (!(m.transpose() == -m)) throw std::logic_error(std::string(what) + " is not skew-symmetric");
}

}  // namespace

DenseMatrix form_matrix(std::size_t h) {
  DenseMatrix b(2 * h, 2 * h);
  const Fp c = half();
  for (std::size_t i = 0; i < h; ++i) {
    b(i, h + i) = c;
    b(h + i, i) = c;
  }
  return b;
}

BlockMatrix BlockMatrix::from_full(const DenseMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) throw Error(ErrorCode::kShapeMismatch, "need a 2h x 2h matrix");
  const std::size_t h = m.rows() / 2;
  return BlockMatrix{h, m.block(0, 0, h, h), m.block(0, h, h, h), m.block(h, 0, h, h), m.block(h, h, h, h)};
}

DenseMatrix BlockMatrix::full() const {
  DenseMatrix m(2 * h, 2 * h);
  m.set_block(0, 0, b11);
  m.set_block(0, h, b12);
  m.set_block(h, 0, b21);
  m.set_block(h, h, b22);
  return m;
}

bool preserves_form(const DenseMatrix& g) {
  if (!g.is_square() || g.rows() % 2 != 0) return false;
  const DenseMatrix b = form_matrix(g.rows() / 2);
  return g.transpose() * b * g == b;
}

bool in_lie_algebra(const DenseMatrix& m) {
  if (!m.is_square() || m.rows() % 2 != 0) return false;
  const DenseMatrix b = form_matrix(m.rows() / 2);
  return m.transpose() * b == -(b * m);
}

OrthogonalElement OrthogonalElement::from_blocks(BlockMatrix blocks) {
  if (!preserves_form(blocks.full())) throw std::invalid_argument("g^t B g != B");
  OrthogonalElement g;
  g.blocks_ = std::move(blocks);
  return g;
}

OrthogonalElement OrthogonalElement::identity(std::size_t h) {
  return from_blocks(BlockMatrix::from_full(DenseMatrix::identity(2 * h)));
}

OrthogonalElement operator*(const OrthogonalElement& a, const OrthogonalElement& b) {
  OrthogonalElement g;
  g.blocks_ = BlockMatrix::from_full(a.blocks_.full() * b.blocks_.full());
  return g;
}

OrthogonalElement OrthogonalElement::inverse() const {
  // B^{-1} = 4B for this Gram matrix.
  const DenseMatrix b = form_matrix(h());
  const DenseMatrix inv = (Fp::raw(4) * b) * blocks_.full().transpose() * b;
  OrthogonalElement g;
  g.blocks_ = BlockMatrix::from_full(inv);
  return g;
}

AlgebraElement AlgebraElement::from_blocks(BlockMatrix blocks) {
  if (!in_lie_algebra(blocks.full())) throw std::invalid_argument("H^t B != -B H");
  AlgebraElement a;
  a.blocks_ = std::move(blocks);
  return a;
}

std::vector<AlgebraElement> so_basis(std::size_t h) {
  std::vector<AlgebraElement> basis;
  basis.reserve(h * (2 * h - 1));
  const DenseMatrix zero(h, h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b) {
      const DenseMatrix e = elementary(h, a, b);
      basis.push_back(AlgebraElement::from_blocks({h, e, zero, zero, -e.transpose()}));
    }
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = a + 1; b < h; ++b)
      basis.push_back(AlgebraElement::from_blocks({h, zero, elementary(h, a, b) - elementary(h, b, a), zero, zero}));
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = a + 1; b < h; ++b)
      basis.push_back(AlgebraElement::from_blocks({h, zero, zero, elementary(h, a, b) - elementary(h, b, a), zero}));
  return basis;
}

std::optional<DenseMatrix> chart_transform(const BlockMatrix& g, const DenseMatrix& u) {
  const DenseMatrix left = g.b11.transpose() + u * g.b12.transpose();
  const DenseMatrix right = g.b21.transpose() + u * g.b22.transpose();
  const auto inv = inverse(left);
  if (!inv) return std::nullopt;
  return *inv * right;
}

SkewMatrix act_on_chart(const OrthogonalElement& g, const SkewMatrix& u) {
  if (g.h() != u.size()) throw Error(ErrorCode::kShapeMismatch, "group element and chart point differ in h");
  const auto moved = chart_transform(g.blocks(), u.to_dense());
  if (!moved) throw Error(ErrorCode::kChartSingular, "g11^t + U g12^t is singular");
  // Skewness of the image is the isotropy condition; from_dense asserts it.
  return SkewMatrix::from_dense(*moved);
}

SkewMatrix first_order_displacement(const AlgebraElement& h, const SkewMatrix& u) {
  const BlockMatrix& b = h.blocks();
  const DenseMatrix ud = u.to_dense();
  const DenseMatrix a =
      b.b21.transpose() + ud * b.b22.transpose() - b.b11.transpose() * ud - ud * b.b12.transpose() * ud;
  require_skew_dense(a, "first-order displacement");
  return SkewMatrix::from_dense(a);
}

DenseMatrix triple_differential(std::size_t h, const SkewMatrix& u1, const SkewMatrix& u2, const SkewMatrix& u3) {
  const std::size_t p = chart_dimension(h);
  const auto basis = so_basis(h);
  DenseMatrix df(basis.size(), 3 * p);
  const SkewMatrix* points[3] = {&u1, &u2, &u3};
  for (std::size_t r = 0; r < basis.size(); ++r)
    for (std::size_t i = 0; i < 3; ++i) {
      const SkewMatrix a = first_order_displacement(basis[r], *points[i]);
      for (std::size_t c = 0; c < p; ++c) df(r, i * p + c) = a.upper()[c];
    }
  return df;
}

std::size_t triple_differential_rank(std::size_t h, const SkewMatrix& u1, const SkewMatrix& u2,
                                     const SkewMatrix& u3) {
  return rank(triple_differential(h, u1, u2, u3));
}

OrbitKernel orbit_kernel_dimensions(std::size_t h) {
  if (h % 2 != 0 || h == 0) throw Error(ErrorCode::kOddSize, "orbit kernel needs even h, got " + std::to_string(h));
  const SkewMatrix j = SkewMatrix::standard_symplectic(h);
  const DenseMatrix df = triple_differential(h, SkewMatrix::zero(h), j, -j);

  // A -> J A - (J A)^t on vec(A); its kernel is { A : J A symmetric }.
  const DenseMatrix jd = j.to_dense();
  DenseMatrix sym(h * h, h * h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b) {
      const DenseMatrix e = elementary(h, a, b);
      const DenseMatrix img = jd * e - (jd * e).transpose();
      for (std::size_t r = 0; r < h; ++r)
        for (std::size_t c = 0; c < h; ++c) sym(r * h + c, a * h + b) = img(r, c);
    }

  // Rows of df are algebra basis elements, so the kernel of the map is the
  // left null space: kernel_dimension of the transpose.
  return OrbitKernel{kernel_dimension(df.transpose()), kernel_dimension(sym)};
}

std::size_t orbit_kernel_dimension(std::size_t h) {
  const OrbitKernel k = orbit_kernel_dimensions(h);
  if (k.via_differential != k.via_symmetry) {
    throw std::logic_error("orbit kernel routes disagree: " + std::to_string(k.via_differential) + " vs " +
                           std::to_string(k.via_symmetry));
  }
  return k.via_differential;
}

std::optional<OrthogonalElement> cayley(const AlgebraElement& n) {
  const std::size_t h = n.h();
  const DenseMatrix id = DenseMatrix::identity(2 * h);
  const DenseMatrix halfn = half() * n.blocks().full();
  const auto inv = inverse(id + halfn);
  if (!inv) return std::nullopt;
  return OrthogonalElement::from_blocks(BlockMatrix::from_full((id - halfn) * *inv));
}

OrthogonalElement random_orthogonal(std::size_t h, std::mt19937_64& rng) {
  const auto basis = so_basis(h);
  while (true) {
    DenseMatrix n(2 * h, 2 * h);
    for (const auto& e : basis) n += uniform_fp(rng) * e.blocks().full();
    if (auto g = cayley(AlgebraElement::from_blocks(BlockMatrix::from_full(n)))) return *std::move(g);
  }
}

}  // namespace spinor_secant
