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
 * @file terracini.hpp
 * @brief Dimension of sigma_k(S_h) from the span of affine tangent spaces.
 *
 * By Terracini's lemma the span of the affine tangent spaces at k general
 * points of S_h has dimension dim sigma_k(S_h) + 1. At random points over
 * F_P the stacked rank is a lower bound for that number, and it reaches the
 * expected value only when the secant variety is non-defective. A rank below
 * the expected value is therefore only evidence; a deterministic certificate
 * (see certificates.hpp) is needed to call it a defect.
 */

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spinor_secant/dense_matrix.hpp"
#include "spinor_secant/spinor.hpp"

namespace spinor_secant {

struct TangentMatrix {
  std::size_t h = 0;
  SkewMatrix base;
  DenseMatrix matrix;  ///< (p+1) x 2^{h-1}: coordinates over the Jacobian
};

[[nodiscard]] TangentMatrix affine_tangent_matrix(const SkewMatrix& u);

/// Rank of the vertically stacked affine tangent matrices at the given points.
[[nodiscard]] std::size_t stacked_tangent_rank(std::span<const SkewMatrix> points);

/// Ambient projective dimension N = 2^{h-1} - 1.
[[nodiscard]] std::uint64_t ambient_dimension(std::size_t h);

/// min(k p + k - 1, N).
[[nodiscard]] std::uint64_t expected_dimension(std::size_t h, std::size_t k);

/// expected_dimension(h, k) - dimension; throws kDimensionExceedsExpected.
[[nodiscard]] std::uint64_t defect(std::size_t h, std::size_t k, std::uint64_t dimension);

enum class SecantStatus {
  kCertifiedNondefective,
  kLowerBoundOnly,
  kCertifiedDefective,
};

[[nodiscard]] std::string_view to_string(SecantStatus s);

struct SecantReport {
  std::size_t h = 0;
  std::size_t k = 0;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t affine_rank = 0;  ///< max over trials
  std::uint64_t dimension = 0;  ///< affine_rank - 1
  std::uint64_t expected = 0;
  // expected - dimension. Because dimension is a lower bound, this is the
  // largest defect consistent with the sample; a certificate pins it down.
  std::uint64_t defect_lower_bound = 0;
  SecantStatus status = SecantStatus::kLowerBoundOnly;
  std::optional<std::string> certificate;
};

/// Status implied by the estimate alone: nondefective iff dimension == expected.
[[nodiscard]] SecantStatus estimate_status(std::uint64_t dimension, std::uint64_t expected);

/// Draws k uniform chart points per trial and keeps the best stacked rank.
/// Trial t uses stream_seed(seed, t); trials run on `threads` workers
/// (0 = auto) and the report does not depend on that choice.
/// Throws kSizeOutOfRange unless 1 <= h <= 24, and std::invalid_argument for k = 0 or trials = 0.
[[nodiscard]] SecantReport secant_dimension_estimate(std::size_t h, std::size_t k, std::uint64_t seed,
                                                     std::size_t trials = 1, std::size_t threads = 1);

/// Optional post-processing hook for each report (e.g. attaching certificates).
using ReportUpgrade = std::function<void(SecantReport&)>;

struct TableRequest {
  std::size_t k = 2;
  std::size_t h_min = 6;
  std::size_t h_max = 11;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
  std::size_t threads = 1;
};

/// Default table h ranges for k = 2..5; nullopt for other k.
[[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> default_h_range(std::size_t k);

/// One report per h in [h_min, h_max], ordered by h regardless of threading.
[[nodiscard]] std::vector<SecantReport> reproduce_tables(const TableRequest& request,
                                                         const ReportUpgrade& upgrade = {});

/// Rank comparison for the --rational cross-check: integer points with
/// entries in [0, 1000), stacked tangent matrix ranked over Q (Bareiss) and
/// over F_P. The F_P rank never exceeds the rational one.
struct RationalCrossCheck {
  std::size_t rational_rank = 0;
  std::size_t modular_rank = 0;
};

[[nodiscard]] RationalCrossCheck rational_cross_check(std::size_t h, std::size_t k, std::uint64_t seed);

}  // namespace spinor_secant
