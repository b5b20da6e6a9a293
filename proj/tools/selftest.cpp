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

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <functional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "cli.hpp"
#include "spinor_secant/certificates.hpp"
#include "spinor_secant/orthogonal.hpp"
#include "spinor_secant/random.hpp"

namespace spinor_secant::cli {

namespace {

struct Check {
  std::string name;
  std::function<bool()> body;
};

bool pfaffian_squares_to_determinant() {
  std::mt19937_64 rng(1);
  for (std::size_t h : {2, 4, 6, 8})
    for (int t = 0; t < 20; ++t) {
      const SkewMatrix u = random_skew(h, rng);
      const Fp pf = pfaffian(u);
      if (pf * pf != determinant(u.to_dense())) return false;
    }
  return true;
}

bool partials_match_finite_difference() {
  std::mt19937_64 rng(2);
  for (std::size_t h : {4, 6, 8}) {
    const auto subsets = enumerate_even_subsets(h);
    for (int t = 0; t < 20; ++t) {
      const SkewMatrix u = random_skew(h, rng);
      const EvenSubset k = subsets[rng() % subsets.size()];
      const std::size_t i = rng() % (h - 1);
      const std::size_t j = i + 1 + rng() % (h - 1 - i);
      SkewMatrix shifted = u;
      shifted.set(i, j, u.at(i, j) + Fp::raw(1));
      if (pfaffian_partial(u, k, i, j) != sub_pfaffian(shifted, k) - sub_pfaffian(u, k)) return false;
    }
  }
  return true;
}

bool origin_is_unit_vector() {
  for (std::size_t h = 1; h <= 12; ++h) {
    const auto s = spinor_coordinates(SkewMatrix::zero(h));
    if (s.coords.front() != Fp::raw(1)) return false;
    for (std::size_t c = 1; c < s.coords.size(); ++c)
      if (!s.coords[c].is_zero()) return false;
  }
  return true;
}

bool stacked_rank_is_group_invariant() {
  std::mt19937_64 rng(3);
  const std::size_t h = 6;
  const std::vector<SkewMatrix> points = {random_skew(h, rng), random_skew(h, rng), random_skew(h, rng)};
  const std::size_t before = stacked_tangent_rank(points);
  for (int t = 0; t < 3; ++t) {
    const OrthogonalElement g = random_orthogonal(h, rng);
    std::vector<SkewMatrix> moved;
    for (const auto& u : points) moved.push_back(act_on_chart(g, u));
    if (stacked_tangent_rank(moved) != before) return false;
  }
  return true;
}

bool reference_rows() {
  return secant_dimension_estimate(6, 2, 0).dimension == 31 && secant_dimension_estimate(7, 3, 0).dimension == 58 &&
         secant_dimension_estimate(8, 3, 0).dimension == 85 && secant_dimension_estimate(8, 4, 0).dimension == 111;
}

}  // namespace

bool run_selftest(std::ostream& out) {
  const std::vector<Check> checks = {
      {"pfaffian^2 = det (h = 2..8)", pfaffian_squares_to_determinant},
      {"pfaffian_partial = exact finite difference", partials_match_finite_difference},
      {"spinor_coordinates(O_h) = unit vector (h <= 12)", origin_is_unit_vector},
      {"stacked tangent rank invariant under SO(12)", stacked_rank_is_group_invariant},
      {"orbit kernel = h(h+1)/2 (h = 2..8)",
       [] {
         for (std::size_t h : {2, 4, 6, 8})
           if (orbit_kernel_dimension(h) != h * (h + 1) / 2) return false;
         return true;
       }},
      {"reference table rows (6,2) (7,3) (8,3) (8,4)", reference_rows},
      {"rnc(8,3) certifies", [] { return rnc_certificate(8, 3).passed(); }},
      {"base12 rank 201", [] { return base12_certificate().passed(); }},
      {"stability rank 2s (s = 12)", [] { return stability_rank_check(12); }},
  };
  bool all = true;
  for (const auto& c : checks) {
    bool ok = false;
    try {
      ok = c.body();
    } catch (const std::exception& e) {
      fmt::print(out, "  exception: {}\n", e.what());
    }
    fmt::print(out, "{} {}\n", ok ? "PASS" : "FAIL", c.name);
    all = all && ok;
  }
  fmt::print(out, "{}\n", all ? "selftest passed" : "selftest FAILED");
  return all;
}

}  // namespace spinor_secant::cli
