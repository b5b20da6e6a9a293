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

#include "spinor_secant/field.hpp"

#include <array>
#include <ostream>
#include <string>

#include "spinor_secant/errors.hpp"

namespace spinor_secant {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonSquare: return "NonSquare";
    case ErrorCode::kSizeOutOfRange: return "SizeOutOfRange";
    case ErrorCode::kBadIndex: return "BadIndex";
    case ErrorCode::kDimensionExceedsExpected: return "DimensionExceedsExpected";
    case ErrorCode::kChartSingular: return "ChartSingular";
    case ErrorCode::kOddSize: return "OddSize";
    case ErrorCode::kInvalidModulus: return "InvalidModulus";
    case ErrorCode::kNotSkew: return "NotSkew";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
  }
  return "Unknown";
}

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t n) {
  std::uint64_t result = 1 % n;
  base %= n;
  while (e != 0) {
    if (e & 1U) result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * base % n);
    base = static_cast<std::uint64_t>(static_cast<unsigned __int128>(base) * base % n);
    e >>= 1U;
  }
  return result;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kSmall = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t q : kSmall) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 3.3e24.
  for (std::uint64_t a : kSmall) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * x % n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_valid_modulus(std::uint64_t modulus) {
  return modulus > (std::uint64_t{1} << 40) && modulus < (std::uint64_t{1} << 63) && is_prime_u64(modulus);
}

ModulusScope::ModulusScope(std::uint64_t modulus) : previous_(detail::tls_modulus) {
  if (!is_valid_modulus(modulus)) {
    throw Error(ErrorCode::kInvalidModulus,
                "modulus " + std::to_string(modulus) + " must be a prime in (2^40, 2^63)");
  }
  detail::tls_modulus = modulus;
}

Fp Fp::pow(std::uint64_t e) const noexcept {
  Fp result = raw(1 % current_modulus());
  Fp base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

Fp Fp::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_P");
  return pow(current_modulus() - 2);
}

std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.value(); }

}  // namespace spinor_secant
