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

#include "spinor_secant/spinor.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>
#include <utility>

#include "spinor_secant/errors.hpp"

namespace spinor_secant {

namespace {

void require_spinor_size(std::size_t h) {
  if (h < 1 || h > kMaxSpinorSize) {
    throw Error(ErrorCode::kSizeOutOfRange,
                "h = " + std::to_string(h) + " outside [1, " + std::to_string(kMaxSpinorSize) + "]");
  }
}

std::uint32_t full_mask(std::size_t h) { return h >= 32 ? ~0U : (std::uint32_t{1} << h) - 1; }

// Canonical order as raw masks; cardinality first, then lexicographic on the
// sorted positions, which for fixed cardinality is "smallest first element first".
std::vector<std::uint32_t> canonical_masks(std::size_t h) {
  require_spinor_size(h);
  std::vector<std::uint32_t> out;
  out.reserve(spinor_length(h));
  for (std::size_t size = 0; size <= h; size += 2) {
    // Walk combinations of `size` positions in lexicographic order.
    std::vector<std::size_t> idx(size);
    for (std::size_t t = 0; t < size; ++t) idx[t] = t;
    while (true) {
      std::uint32_t m = 0;
      for (std::size_t v : idx) m |= std::uint32_t{1} << v;
      out.push_back(m);
      std::size_t t = size;
      while (t > 0 && idx[t - 1] == h - size + t - 1) --t;
      if (t == 0) break;
      ++idx[t - 1];
      for (std::size_t u = t; u < size; ++u) idx[u] = idx[u - 1] + 1;
    }
  }
  return out;
}

}  // namespace

// ---- SkewMatrix -----------------------------------------------------------

SkewMatrix::SkewMatrix(std::size_t h, std::vector<Fp> upper) : h_(h), upper_(std::move(upper)) {
  if (upper_.size() != chart_dimension(h)) {
    throw Error(ErrorCode::kShapeMismatch, std::to_string(upper_.size()) + " upper entries for h = " +
                                               std::to_string(h));
  }
}

SkewMatrix SkewMatrix::block_diagonal(std::size_t h, std::span<const std::int64_t> block_values) {
  if (2 * block_values.size() > h) {
    throw Error(ErrorCode::kShapeMismatch, "too many 2x2 blocks for h = " + std::to_string(h));
  }
  SkewMatrix u(h);
  for (std::size_t b = 0; b < block_values.size(); ++b) u.set(2 * b, 2 * b + 1, Fp::from_int(block_values[b]));
  return u;
}

SkewMatrix SkewMatrix::standard_symplectic(std::size_t h) {
  if (h % 2 != 0) throw Error(ErrorCode::kOddSize, "J_m needs even h, got " + std::to_string(h));
  const std::vector<std::int64_t> ones(h / 2, 1);
  return block_diagonal(h, ones);
}

SkewMatrix SkewMatrix::from_dense(const DenseMatrix& d) {
  if (!d.is_square()) throw Error(ErrorCode::kNotSkew, "matrix is not square");
  const std::size_t h = d.rows();
  SkewMatrix u(h);
  for (std::size_t i = 0; i < h; ++i) {
    if (!d(i, i).is_zero()) throw Error(ErrorCode::kNotSkew, "nonzero diagonal");
    for (std::size_t j = i + 1; j < h; ++j) {
      if (d(i, j) != -d(j, i)) throw Error(ErrorCode::kNotSkew, "d^t != -d");
      u.upper_[pair_index(h, i, j)] = d(i, j);
    }
  }
  return u;
}

Fp SkewMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= h_ || j >= h_) throw Error(ErrorCode::kBadIndex, "index outside matrix");
  if (i == j) return Fp{};
  return i < j ? upper_[pair_index(h_, i, j)] : -upper_[pair_index(h_, j, i)];
}

void SkewMatrix::set(std::size_t i, std::size_t j, Fp value) {
  if (!(i < j && j < h_)) throw Error(ErrorCode::kBadIndex, "set requires i < j < h");
  upper_[pair_index(h_, i, j)] = value;
}

DenseMatrix SkewMatrix::to_dense() const {
  DenseMatrix d(h_, h_);
  for (std::size_t i = 0; i < h_; ++i)
    for (std::size_t j = i + 1; j < h_; ++j) {
      const Fp x = upper_[pair_index(h_, i, j)];
      d(i, j) = x;
      d(j, i) = -x;
    }
  return d;
}

SkewMatrix SkewMatrix::principal(std::span<const std::size_t> positions) const {
  SkewMatrix s(positions.size());
  for (std::size_t a = 0; a < positions.size(); ++a)
    for (std::size_t b = a + 1; b < positions.size(); ++b) s.set(a, b, at(positions[a], positions[b]));
  return s;
}

SkewMatrix SkewMatrix::padded(std::size_t n) const {
  if (n < h_) throw Error(ErrorCode::kShapeMismatch, "cannot pad to a smaller size");
  SkewMatrix s(n);
  for (std::size_t i = 0; i < h_; ++i)
    for (std::size_t j = i + 1; j < h_; ++j) s.set(i, j, upper_[pair_index(h_, i, j)]);
  return s;
}

// ---- EvenSubset -----------------------------------------------------------

EvenSubset EvenSubset::from_mask(std::uint32_t mask) {
  if (std::popcount(mask) % 2 != 0) throw Error(ErrorCode::kBadIndex, "subset has odd cardinality");
  EvenSubset s;
  s.mask_ = mask;
  return s;
}

EvenSubset EvenSubset::from_positions(std::span<const std::size_t> positions) {
  std::uint32_t m = 0;
  for (std::size_t p : positions) {
    if (p >= 32 || ((m >> p) & 1U)) throw Error(ErrorCode::kBadIndex, "bad or repeated position");
    m |= std::uint32_t{1} << p;
  }
  return from_mask(m);
}

std::size_t EvenSubset::cardinality() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> EvenSubset::positions() const {
  std::vector<std::size_t> out;
  for (std::uint32_t w = mask_; w != 0; w &= w - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
  return out;
}

std::vector<EvenSubset> enumerate_even_subsets(std::size_t h) {
  std::vector<EvenSubset> out;
  for (std::uint32_t m : canonical_masks(h)) out.push_back(EvenSubset::from_mask(m));
  return out;
}

std::vector<std::size_t> canonical_positions(std::size_t h) {
  const auto masks = canonical_masks(h);
  std::vector<std::size_t> pos(std::size_t{1} << h, std::numeric_limits<std::size_t>::max());
  for (std::size_t c = 0; c < masks.size(); ++c) pos[masks[c]] = c;
  return pos;
}

// ---- Pfaffians --------------------------------------------------------------

Fp pfaffian(const SkewMatrix& u) {
  const std::size_t h = u.size();
  if (h % 2 != 0) return Fp{};
  if (h == 0) return Fp::raw(1);
  require_spinor_size(h);
  return detail::pfaffian_table<Fp>(h, u.upper(), full_mask(h), Fp::raw(1))[full_mask(h)];
}

Fp sub_pfaffian(const SkewMatrix& u, EvenSubset k) {
  if ((k.mask() & ~full_mask(u.size())) != 0) throw Error(ErrorCode::kBadIndex, "subset exceeds matrix size");
  if (k.mask() == 0) return Fp::raw(1);
  const auto pos = k.positions();
  return pfaffian(u.principal(pos));
}

SpinorPoint spinor_coordinates(const SkewMatrix& u) {
  const std::size_t h = u.size();
  const auto masks = canonical_masks(h);
  const auto table = detail::pfaffian_table<Fp>(h, u.upper(), full_mask(h), Fp::raw(1));
  SpinorPoint s{h, std::vector<Fp>(masks.size())};
  for (std::size_t c = 0; c < masks.size(); ++c) s.coords[c] = table[masks[c]];
  return s;
}

Fp pfaffian_partial(const SkewMatrix& u, EvenSubset k, std::size_t i, std::size_t j) {
  const std::size_t h = u.size();
  if (!(i < j && j < h)) throw Error(ErrorCode::kBadIndex, "partial requires i < j < h");
  if ((k.mask() & ~full_mask(h)) != 0) throw Error(ErrorCode::kBadIndex, "subset exceeds matrix size");
  if (!k.contains(i) || !k.contains(j)) return Fp{};
  const std::uint32_t below_i = k.mask() & ((std::uint32_t{1} << i) - 1);
  const std::uint32_t below_j = k.mask() & ((std::uint32_t{1} << j) - 1);
  const int a = std::popcount(below_i);
  const int b = std::popcount(below_j);
  const EvenSubset rest = EvenSubset::from_mask(k.mask() & ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j)));
  const Fp cof = sub_pfaffian(u, rest);
  return (a + b) % 2 == 1 ? cof : -cof;
}

DenseMatrix jacobian(const SkewMatrix& u) {
  const std::size_t h = u.size();
  const auto masks = canonical_masks(h);
  const auto table = detail::pfaffian_table<Fp>(h, u.upper(), full_mask(h), Fp::raw(1));
  DenseMatrix j(chart_dimension(h), masks.size());
  detail::jacobian_from_table<Fp>(h, table, masks, [&](std::size_t row, std::size_t col, Fp cof, bool negative) {
    j(row, col) = negative ? -cof : cof;
  });
  return j;
}

}  // namespace spinor_secant
