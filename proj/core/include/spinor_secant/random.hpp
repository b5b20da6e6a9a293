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

#include <cstdint>
#include <random>

#include "spinor_secant/field.hpp"
#include "spinor_secant/spinor.hpp"

namespace spinor_secant {

/// SplitMix64 finalizer; derives independent stream seeds from a master seed.
[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Seed of stream `index` under `master`. Fixed rule so parallel and
/// sequential execution draw identical points.
[[nodiscard]] constexpr std::uint64_t stream_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return splitmix64(master ^ splitmix64(index + 1));
}

/// Uniform field element by rejection on the raw mt19937_64 output, so the
/// stream is identical across standard library implementations.
[[nodiscard]] Fp uniform_fp(std::mt19937_64& rng);

/// Skew matrix with independent uniform upper entries.
[[nodiscard]] SkewMatrix random_skew(std::size_t h, std::mt19937_64& rng);

/// Skew matrix with independent integer entries in [0, bound), as in the
/// rational cross-check.
[[nodiscard]] std::vector<std::int64_t> random_small_upper(std::size_t h, std::int64_t bound, std::mt19937_64& rng);

}  // namespace spinor_secant
