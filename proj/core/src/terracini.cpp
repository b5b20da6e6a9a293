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

#include "spinor_secant/terracini.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "spinor_secant/errors.hpp"
#include "spinor_secant/parallel.hpp"
#include "spinor_secant/random.hpp"
#include "spinor_secant/rational_rank.hpp"

namespace spinor_secant {

namespace {

void require_h(std::size_t h) {
  if (h < 1 || h > kMaxSpinorSize) {
    throw Error(ErrorCode::kSizeOutOfRange, "h = " + std::to_string(h) + " outside [1, 24]");
  }
}

// Integer version of affine_tangent_matrix for the rational cross-check.
IntegerMatrix integer_tangent_matrix(std::size_t h, const std::vector<mpz_class>& upper) {
  const auto subsets = enumerate_even_subsets(h);
  std::vector<std::uint32_t> masks;
  masks.reserve(subsets.size());
  for (const auto& s : subsets) masks.push_back(s.mask());
  const std::uint32_t full = (std::uint32_t{1} << h) - 1;
  const auto table = detail::pfaffian_table<mpz_class>(h, upper, full, mpz_class(1));
  IntegerMatrix m(chart_dimension(h) + 1, masks.size());
  for (std::size_t c = 0; c < masks.size(); ++c) m(0, c) = table[masks[c]];
  detail::jacobian_from_table<mpz_class>(h, table, masks,
                                         [&](std::size_t row, std::size_t col, const mpz_class& cof, bool neg) {
                                           m(row + 1, col) = neg ? mpz_class(-cof) : cof;
                                         });
  return m;
}

}  // namespace

TangentMatrix affine_tangent_matrix(const SkewMatrix& u) {
  const std::size_t h = u.size();
  require_h(h);
  const SpinorPoint coords = spinor_coordinates(u);
  const DenseMatrix jac = jacobian(u);
  DenseMatrix m(jac.rows() + 1, jac.cols());
  for (std::size_t c = 0; c < coords.coords.size(); ++c) m(0, c) = coords.coords[c];
  m.set_block(1, 0, jac);
  return TangentMatrix{h, u, std::move(m)};
}

std::size_t stacked_tangent_rank(std::span<const SkewMatrix> points) {
  std::vector<DenseMatrix> blocks;
  blocks.reserve(points.size());
  for (const auto& u : points) blocks.push_back(affine_tangent_matrix(u).matrix);
  return rank(vstack(blocks));
}

std::uint64_t ambient_dimension(std::size_t h) {
  require_h(h);
  return (std::uint64_t{1} << (h - 1)) - 1;
}

std::uint64_t expected_dimension(std::size_t h, std::size_t k) {
  if (k < 1) throw std::invalid_argument("expected_dimension requires k >= 1");
  const std::uint64_t p = chart_dimension(h);
  return std::min<std::uint64_t>(k * p + k - 1, ambient_dimension(h));
}

std::uint64_t defect(std::size_t h, std::size_t k, std::uint64_t dimension) {
  const std::uint64_t expected = expected_dimension(h, k);
  if (dimension > expected) {
    throw Error(ErrorCode::kDimensionExceedsExpected,
                std::to_string(dimension) + " > expected " + std::to_string(expected));
  }
  return expected - dimension;
}

std::string_view to_string(SecantStatus s) {
  switch (s) {
    case SecantStatus::kCertifiedNondefective: return "CERTIFIED_NONDEFECTIVE";
    case SecantStatus::kLowerBoundOnly: return "LOWER_BOUND_ONLY";
    case SecantStatus::kCertifiedDefective: return "CERTIFIED_DEFECTIVE";
  }
  return "UNKNOWN";
}

SecantStatus estimate_status(std::uint64_t dimension, std::uint64_t expected) {
  return dimension == expected ? SecantStatus::kCertifiedNondefective : SecantStatus::kLowerBoundOnly;
}

SecantReport secant_dimension_estimate(std::size_t h, std::size_t k, std::uint64_t seed, std::size_t trials,
                                       std::size_t threads) {
  require_h(h);
  if (k < 1) throw std::invalid_argument("secant_dimension_estimate requires k >= 1");
  if (trials < 1) throw std::invalid_argument("secant_dimension_estimate requires trials >= 1");

  std::vector<std::size_t> ranks(trials, 0);
  parallel_for(trials, threads, [&](std::size_t t) {
    std::mt19937_64 rng(stream_seed(seed, t));
    std::vector<SkewMatrix> points;
    points.reserve(k);
    for (std::size_t i = 0; i < k; ++i) points.push_back(random_skew(h, rng));
    ranks[t] = stacked_tangent_rank(points);
  });

  SecantReport r;
  r.h = h;
  r.k = k;
  r.prime = current_modulus();
  r.seed = seed;
  r.trials = trials;
  r.affine_rank = *std::max_element(ranks.begin(), ranks.end());
  r.dimension = r.affine_rank - 1;
  r.expected = expected_dimension(h, k);
  r.defect_lower_bound = defect(h, k, r.dimension);
  r.status = estimate_status(r.dimension, r.expected);
  return r;
}

std::optional<std::pair<std::size_t, std::size_t>> default_h_range(std::size_t k) {
  switch (k) {
    case 2: return std::pair<std::size_t, std::size_t>{6, 11};
    case 3: return std::pair<std::size_t, std::size_t>{7, 12};
    case 4: return std::pair<std::size_t, std::size_t>{7, 10};
    case 5: return std::pair<std::size_t, std::size_t>{8, 9};
    default: return std::nullopt;
  }
}

std::vector<SecantReport> reproduce_tables(const TableRequest& request, const ReportUpgrade& upgrade) {
  if (request.h_min > request.h_max) throw std::invalid_argument("h_min > h_max");
  require_h(request.h_min);
  require_h(request.h_max);
  const std::size_t n = request.h_max - request.h_min + 1;
  std::vector<SecantReport> out(n);
  // Rows run in parallel; trials inside a row stay sequential.
  parallel_for(n, request.threads, [&](std::size_t i) {
    out[i] = secant_dimension_estimate(request.h_min + i, request.k, request.seed, request.trials, 1);
    if (upgrade) upgrade(out[i]);
  });
  return out;
}

RationalCrossCheck rational_cross_check(std::size_t h, std::size_t k, std::uint64_t seed) {
  require_h(h);
  if (k < 1) throw std::invalid_argument("rational_cross_check requires k >= 1");
  std::mt19937_64 rng(stream_seed(seed, 0));
  std::vector<IntegerMatrix> blocks;
  for (std::size_t i = 0; i < k; ++i) {
    const auto small = random_small_upper(h, 1000, rng);
    std::vector<mpz_class> upper(small.begin(), small.end());
    blocks.push_back(integer_tangent_matrix(h, upper));
  }
  const IntegerMatrix stacked = vstack(blocks);
  return RationalCrossCheck{rational_rank(stacked), rank(stacked.reduce())};
}

}  // namespace spinor_secant
