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
 * @file certificates.hpp
 * @brief Deterministic checks that turn rank estimates into exact statements.
 *
 *  - rnc_certificate:    a rational normal curve through three general points
 *                        forces sigma_k(S_h) below its expected dimension.
 *  - s7_certificate:     open orbit of three points of S_7 plus their tangent
 *                        span gives dim sigma_3(S_7) exactly.
 *  - base12_certificate: independence of the three affine tangent spaces of
 *                        S_12 at O, J_6, K_6.
 *  - stability_rank_check: the rank condition that carries that independence
 *                        from S_s to S_{s+1}.
 */

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spinor_secant/dense_matrix.hpp"
#include "spinor_secant/spinor.hpp"
#include "spinor_secant/terracini.hpp"

namespace spinor_secant {

enum class VerdictStatus {
  kDefectiveCertified,
  kNondefectiveCertified,
  kHolds,  ///< a structural check (orbit, stability) passed
  kHypothesisFailed,
  kUnluckySample,
  kFailed,
};

[[nodiscard]] std::string_view to_string(VerdictStatus s);

struct CertificateCheck {
  std::string label;  ///< short id, e.g. "a" or "rank_df"
  std::string description;
  std::int64_t observed = 0;
  std::int64_t required = 0;
  bool ok = false;
};

struct CertificateVerdict {
  std::string name;
  VerdictStatus status = VerdictStatus::kFailed;
  std::vector<CertificateCheck> checks;
  std::optional<std::string> failed_check;  ///< label of the first failing check
  std::optional<std::uint64_t> dimension;   ///< exact dimension, when established
  std::optional<std::uint64_t> defect;
  std::string note;

  [[nodiscard]] bool passed() const noexcept {
    return status == VerdictStatus::kDefectiveCertified || status == VerdictStatus::kNondefectiveCertified ||
           status == VerdictStatus::kHolds;
  }
  [[nodiscard]] const CertificateCheck* find(std::string_view label) const;
};

/// Three chart points used by the certificates.
struct StandardTriple {
  std::size_t h = 0;
  SkewMatrix u0, u1, u2;

  /// (O_h, J_m, -J_m), h = 2m. Throws kOddSize.
  static StandardTriple symplectic(std::size_t h);
  /// (O_12, J_6, K_6) with K_6 = blocks [[0,t],[-t,0]], t = 2..7 in order.
  static StandardTriple base12();
};

[[nodiscard]] SkewMatrix k6_matrix();

/// Conditions, checked in order:
///  (a) every coordinate of C(t) = [I | t J_m] is c t^d with d <= m (interpolation at m+2 points);
///  (b) coordinate vectors at m+1 values of t have rank m+1;
///  (c) k p + k - 1 <= 2^{h-1} - 1;
///  (d) m <= 2k - 2;
///  (e) the curve points C(0), C(1), C(-1) have an open orbit (k = 3 only).
/// Throws kOddSize for odd h and std::invalid_argument for k < 2.
[[nodiscard]] CertificateVerdict rnc_certificate(std::size_t h, std::size_t k);

/// U1 = O_7, U2 and U3 uniform from `seed`. UnluckySample if the orbit is not open.
[[nodiscard]] CertificateVerdict s7_certificate(std::uint64_t seed);

[[nodiscard]] CertificateVerdict base12_certificate();

/// The 2s x C(s,3) matrix of y-derivatives of the size-4 sub-Pfaffians through
/// the new last column, at the two points embedded into S_{s+1}. Rows: y_1..y_s
/// at u1, then at u2. Columns: {a, b, c, s+1} with a < b < c <= s, lexicographic.
[[nodiscard]] DenseMatrix stability_matrix(std::size_t s, const SkewMatrix& u1, const SkewMatrix& u2);
[[nodiscard]] std::size_t stability_rank(std::size_t s, const SkewMatrix& u1, const SkewMatrix& u2);
/// rank = 2s at J_6 and K_6 zero-padded to size s. Throws kSizeOutOfRange for s < 12.
[[nodiscard]] bool stability_rank_check(std::size_t s);

/// Verdict wrappers for the CLI.
[[nodiscard]] CertificateVerdict stability_certificate(std::size_t s);
[[nodiscard]] CertificateVerdict orbit_certificate(std::size_t h);

/// Upgrades a report to CERTIFIED_DEFECTIVE when a deterministic certificate
/// covers (h, k): s7 for (7,3); the curve certificate for (8,3); for (8,4) the
/// same curve certificate together with the implication that four tangent
/// spaces of S_8 are always dependent (stated in the certificate text, not
/// computed). Other reports are left unchanged.
void attach_known_certificate(SecantReport& report, std::uint64_t seed);

}  // namespace spinor_secant
