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

#include "spinor_secant/dense_matrix.hpp"

#include <string>
#include <utility>

#include "spinor_secant/errors.hpp"

namespace spinor_secant {

namespace {

std::string shape(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

void require_same_shape(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kShapeMismatch, shape(a.rows(), a.cols()) + " vs " + shape(b.rows(), b.cols()));
  }
}

// Works on raw residues with the modulus hoisted out of the inner loops.
struct Eliminator {
  std::size_t rows;
  std::size_t cols;
  std::vector<std::uint64_t> a;
  std::uint64_t p = current_modulus();

  explicit Eliminator(const DenseMatrix& m) : rows(m.rows()), cols(m.cols()), a(m.rows() * m.cols()) {
    const auto src = m.entries();
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = src[i].value();
  }

  std::uint64_t* row(std::size_t r) { return a.data() + r * cols; }

  void swap_rows(std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    std::uint64_t* x = row(r1);
    std::uint64_t* y = row(r2);
    for (std::size_t c = 0; c < cols; ++c) std::swap(x[c], y[c]);
  }

  // row(target)[c] -= factor * row(source)[c] for c >= from.
  void axpy(std::size_t target, std::size_t source, std::uint64_t factor, std::size_t from) {
    if (factor == 0) return;
    const std::uint64_t neg = p - factor;
    std::uint64_t* t = row(target);
    const std::uint64_t* s = row(source);
    for (std::size_t c = from; c < cols; ++c) {
      if (s[c] == 0) continue;
      std::uint64_t v = t[c] + Fp::mul_mod(neg, s[c], p);
      if (v >= p) v -= p;
      t[c] = v;
    }
  }

  void scale(std::size_t r, std::uint64_t factor, std::size_t from) {
    std::uint64_t* t = row(r);
    for (std::size_t c = from; c < cols; ++c) t[c] = Fp::mul_mod(t[c], factor, p);
  }

  std::uint64_t inv(std::uint64_t x) const { return Fp::raw(x).inverse().value(); }
};

}  // namespace

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<Fp> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw Error(ErrorCode::kShapeMismatch,
                std::to_string(entries_.size()) + " entries for a " + shape(rows_, cols_) + " matrix");
  }
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fp::raw(1);
  return m;
}

DenseMatrix DenseMatrix::from_ints(std::size_t rows, std::size_t cols, std::span<const std::int64_t> values) {
  std::vector<Fp> e;
  e.reserve(values.size());
  for (std::int64_t v : values) e.push_back(Fp::from_int(v));
  return DenseMatrix(rows, cols, std::move(e));
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
  if (r0 + rows > rows_ || c0 + cols > cols_) {
    throw Error(ErrorCode::kShapeMismatch, "block exceeds " + shape(rows_, cols_));
  }
  DenseMatrix b(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) {
    throw Error(ErrorCode::kShapeMismatch, "block exceeds " + shape(rows_, cols_));
  }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  require_same_shape(*this, o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Fp s) {
  for (Fp& x : entries_) x *= s;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw Error(ErrorCode::kShapeMismatch, shape(a.rows_, a.cols_) + " * " + shape(b.rows_, b.cols_));
  }
  DenseMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Fp aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool DenseMatrix::is_zero() const noexcept {
  for (Fp x : entries_)
    if (!x.is_zero()) return false;
  return true;
}

DenseMatrix vstack(std::span<const DenseMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw Error(ErrorCode::kShapeMismatch, "vstack column counts differ");
    rows += b.rows();
  }
  std::vector<Fp> e;
  e.reserve(rows * cols);
  for (const auto& b : blocks) e.insert(e.end(), b.entries().begin(), b.entries().end());
  return DenseMatrix(rows, cols, std::move(e));
}

std::size_t rank(const DenseMatrix& m) {
  Eliminator el(m);
  std::size_t r = 0;
  for (std::size_t c = 0; c < el.cols && r < el.rows; ++c) {
    std::size_t pivot = r;
    while (pivot < el.rows && el.row(pivot)[c] == 0) ++pivot;
    if (pivot == el.rows) continue;
    el.swap_rows(r, pivot);
    el.scale(r, el.inv(el.row(r)[c]), c);
    for (std::size_t i = r + 1; i < el.rows; ++i) el.axpy(i, r, el.row(i)[c], c);
    ++r;
  }
  return r;
}

std::size_t kernel_dimension(const DenseMatrix& m) { return m.cols() - rank(m); }

Fp determinant(const DenseMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kNonSquare, shape(m.rows(), m.cols()));
  Eliminator el(m);
  const std::size_t n = el.rows;
  Fp det = Fp::raw(1 % el.p);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && el.row(pivot)[c] == 0) ++pivot;
    if (pivot == n) return Fp{};
    if (pivot != c) {
      el.swap_rows(c, pivot);
      det = -det;
    }
    const std::uint64_t piv = el.row(c)[c];
    det *= Fp::raw(piv);
    const std::uint64_t inv = el.inv(piv);
    for (std::size_t i = c + 1; i < n; ++i) {
      el.axpy(i, c, Fp::mul_mod(el.row(i)[c], inv, el.p), c);
    }
  }
  return det;
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::kNonSquare, shape(m.rows(), m.cols()));
  const std::size_t n = m.rows();
  DenseMatrix aug(n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, DenseMatrix::identity(n));
  Eliminator el(aug);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && el.row(pivot)[c] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    el.swap_rows(c, pivot);
    el.scale(c, el.inv(el.row(c)[c]), 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != c) el.axpy(i, c, el.row(i)[c], 0);
    }
  }
  DenseMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out(r, c) = Fp::raw(el.row(r)[n + c]);
  return out;
}

}  // namespace spinor_secant
