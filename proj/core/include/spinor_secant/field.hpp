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
 * @file field.hpp
 * @brief Arithmetic in the prime field F_P.
 *
 * The modulus is ambient: it lives in a thread-local slot that defaults to
 * the Mersenne prime 2^61 - 1 and is changed only through ModulusScope.
 * Scalars store a canonical residue in [0, P) and nothing else, so a
 * matrix of Fp is a flat array of 64-bit words.
 *
 * Worker threads start with the default modulus; code that fans out work
 * must re-install the caller's modulus in each worker (see parallel.hpp).
 */

#include <cstdint>
#include <iosfwd>

namespace spinor_secant {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Deterministic Miller-Rabin for the full 64-bit range.
[[nodiscard]] bool is_prime_u64(std::uint64_t n);

namespace detail {
inline thread_local std::uint64_t tls_modulus = kMersenne61;
}

[[nodiscard]] inline std::uint64_t current_modulus() noexcept { return detail::tls_modulus; }

/// Installs a modulus for the current thread until destruction.
/// Throws Error(kInvalidModulus) unless P is prime with 2^40 < P < 2^63.
class ModulusScope {
 public:
  explicit ModulusScope(std::uint64_t modulus);
  ~ModulusScope() { detail::tls_modulus = previous_; }

  ModulusScope(const ModulusScope&) = delete;
  ModulusScope& operator=(const ModulusScope&) = delete;

 private:
  std::uint64_t previous_;
};

/// Validation used by ModulusScope and the CLI.
[[nodiscard]] bool is_valid_modulus(std::uint64_t modulus);

class Fp {
 public:
  constexpr Fp() noexcept = default;

  /// Reduces any signed integer into [0, P).
  static Fp from_int(std::int64_t x) noexcept {
    const std::uint64_t p = current_modulus();
    if (x >= 0) return raw(static_cast<std::uint64_t>(x) % p);
    const std::uint64_t m = (static_cast<std::uint64_t>(-(x + 1)) + 1) % p;
    return raw(m == 0 ? 0 : p - m);
  }
  static Fp from_u64(std::uint64_t x) noexcept { return raw(x % current_modulus()); }
  /// Caller guarantees x < P.
  static constexpr Fp raw(std::uint64_t x) noexcept {
    Fp r;
    r.value_ = x;
    return r;
  }

  [[nodiscard]] constexpr std::uint64_t value() const noexcept { return value_; }
  [[nodiscard]] constexpr bool is_zero() const noexcept { return value_ == 0; }

  /// Symmetric representative in (-P/2, P/2], handy for printing small integers.
  [[nodiscard]] std::int64_t signed_value() const noexcept {
    const std::uint64_t p = current_modulus();
    return value_ > p / 2 ? -static_cast<std::int64_t>(p - value_) : static_cast<std::int64_t>(value_);
  }

  Fp& operator+=(Fp o) noexcept {
    const std::uint64_t p = current_modulus();
    value_ += o.value_;
    if (value_ >= p) value_ -= p;
    return *this;
  }
  Fp& operator-=(Fp o) noexcept {
    const std::uint64_t p = current_modulus();
    value_ = value_ >= o.value_ ? value_ - o.value_ : value_ + (p - o.value_);
    return *this;
  }
  Fp& operator*=(Fp o) noexcept {
    value_ = mul_mod(value_, o.value_, current_modulus());
    return *this;
  }
  Fp& operator/=(Fp o) { return *this *= o.inverse(); }

  friend Fp operator+(Fp a, Fp b) noexcept { return a += b; }
  friend Fp operator-(Fp a, Fp b) noexcept { return a -= b; }
  friend Fp operator*(Fp a, Fp b) noexcept { return a *= b; }
  friend Fp operator/(Fp a, Fp b) { return a /= b; }
  friend Fp operator-(Fp a) noexcept { return Fp{} - a; }
  friend constexpr bool operator==(Fp a, Fp b) noexcept { return a.value_ == b.value_; }

  [[nodiscard]] Fp pow(std::uint64_t e) const noexcept;
  /// Fermat inverse. Throws std::domain_error for zero.
  [[nodiscard]] Fp inverse() const;

  static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
    const unsigned __int128 prod = static_cast<unsigned __int128>(a) * b;
    if (p == kMersenne61) {
      std::uint64_t r = static_cast<std::uint64_t>(prod & kMersenne61) +
                        static_cast<std::uint64_t>(prod >> 61);
      if (r >= kMersenne61) r -= kMersenne61;
      return r;
    }
    return static_cast<std::uint64_t>(prod % p);
  }

 private:
  std::uint64_t value_ = 0;
};

std::ostream& operator<<(std::ostream& os, Fp x);

}  // namespace spinor_secant
