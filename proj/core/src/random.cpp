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

#include "spinor_secant/random.hpp"

#include <bit>

namespace spinor_secant {

Fp uniform_fp(std::mt19937_64& rng) {
  const std::uint64_t p = current_modulus();
  const std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(p);
  while (true) {
    const std::uint64_t x = rng() & mask;
    if (x < p) return Fp::raw(x);
  }
}

SkewMatrix random_skew(std::size_t h, std::mt19937_64& rng) {
  std::vector<Fp> upper(chart_dimension(h));
  for (Fp& x : upper) x = uniform_fp(rng);
  return SkewMatrix(h, std::move(upper));
}

std::vector<std::int64_t> random_small_upper(std::size_t h, std::int64_t bound, std::mt19937_64& rng) {
  std::vector<std::int64_t> upper(chart_dimension(h));
  const auto b = static_cast<std::uint64_t>(bound);
  // Rejection keeps the draw unbiased and implementation-independent.
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % b);
  for (auto& x : upper) {
    std::uint64_t r;
    do {
      r = rng();
    } while (r >= limit);
    x = static_cast<std::int64_t>(r % b);
  }
  return upper;
}

}  // namespace spinor_secant
