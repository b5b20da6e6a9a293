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

// Ring-generic kernels shared by the prime-field path and the integer
// (rational cross-check) path. Ring needs +=, -=, *, == and a value-initialized zero.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace spinor_secant::detail {

inline std::size_t pair_offset(std::size_t h, std::size_t i, std::size_t j) noexcept {
  return i * (2 * h - i - 1) / 2 + (j - i - 1);
}

/// table[mask] = Pf of the principal submatrix on mask, for every even mask
/// that is a subset of `universe`; other slots are left at zero.
/// Expansion along the lowest index i of K:
///   Pf(K) = sum_{j in K, j > i} (-1)^{t(j)} u_{ij} Pf(K \ {i, j}),
/// with t(j) the 0-based rank of j in K \ {i}.
template <class Ring>
std::vector<Ring> pfaffian_table(std::size_t h, std::span<const Ring> upper, std::uint32_t universe,
                                 const Ring& one) {
  const Ring zero{};
  std::vector<Ring> table(std::size_t{1} << h, zero);
  table[0] = one;
  // Ascending submask walk: every K \ {i,j} is visited before K.
  for (std::uint32_t k = (0U - universe) & universe; k != 0; k = (k - universe) & universe) {
    if (std::popcount(k) % 2 != 0) continue;
    const unsigned i = static_cast<unsigned>(std::countr_zero(k));
    std::uint32_t rest = k & (k - 1);
    Ring acc{};
    bool negative = false;
    for (std::uint32_t walk = rest; walk != 0; walk &= walk - 1) {
      const unsigned j = static_cast<unsigned>(std::countr_zero(walk));
      const Ring& pf = table[rest & ~(std::uint32_t{1} << j)];
      if (!(pf == zero)) {
        const Ring term = upper[pair_offset(h, i, j)] * pf;
        if (negative) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      negative = !negative;
    }
    table[k] = acc;
  }
  return table;
}

/// Fills `out` (p x 2^{h-1}, row-major) with the signed-cofactor Jacobian
/// read from a full Pfaffian table. `column_of[mask]` gives the canonical column.
template <class Ring, class Sink>
void jacobian_from_table(std::size_t h, const std::vector<Ring>& table, std::span<const std::uint32_t> masks,
                         Sink&& sink) {
  for (std::size_t col = 0; col < masks.size(); ++col) {
    const std::uint32_t k = masks[col];
    unsigned a = 0;
    for (std::uint32_t wi = k; wi != 0; wi &= wi - 1, ++a) {
      const unsigned i = static_cast<unsigned>(std::countr_zero(wi));
      unsigned b = a + 1;
      for (std::uint32_t wj = wi & (wi - 1); wj != 0; wj &= wj - 1, ++b) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(wj));
        const Ring& cof = table[k & ~((std::uint32_t{1} << i) | (std::uint32_t{1} << j))];
        if (cof == Ring{}) continue;
        // (-1)^{a+b+1}: positive when a + b is odd.
        sink(pair_offset(h, i, j), col, cof, ((a + b) % 2) == 0);
      }
    }
  }
}

}  // namespace spinor_secant::detail
