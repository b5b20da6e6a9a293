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

// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any failure.

#include <fmt/format.h>

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "spinor_secant/certificates.hpp"
#include "spinor_secant/errors.hpp"
#include "spinor_secant/orthogonal.hpp"
#include "spinor_secant/random.hpp"
#include "spinor_secant/terracini.hpp"

namespace ss = spinor_secant;

namespace {

// Wall-clock budgets in seconds.
constexpr double kTableK2Budget = 60.0;
constexpr double kTableK3Budget = 300.0;
constexpr double kS7Budget = 10.0;
constexpr double kBase12Budget = 60.0;

constexpr std::uint64_t kSeed = 0;
constexpr int kPropertyTrials = 100;
constexpr std::size_t kPropertyMaxH = 8;
constexpr std::size_t kOriginMaxH = 12;
constexpr std::size_t kInvarianceMaxK = 3;
constexpr int kInvarianceElements = 10;

struct Outcome {
  bool ok = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string join(const std::vector<std::uint64_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::vector<std::uint64_t> table_dimensions(std::size_t k, std::size_t h_min, std::size_t h_max) {
  ss::TableRequest request;
  request.k = k;
  request.h_min = h_min;
  request.h_max = h_max;
  request.seed = kSeed;
  request.threads = 0;
  std::vector<std::uint64_t> dims;
  for (const auto& r : ss::reproduce_tables(request)) dims.push_back(r.dimension);
  return dims;
}

Outcome table_check(std::size_t k, std::size_t h_min, std::size_t h_max, const std::vector<std::uint64_t>& want,
                    double budget) {
  const auto start = Clock::now();
  const auto got = table_dimensions(k, h_min, h_max);
  const double elapsed = seconds_since(start);
  return {got == want && elapsed < budget,
          fmt::format("k={} h={}..{} dims [{}] want [{}], {:.2f}s (limit {:.0f}s)", k, h_min, h_max, join(got),
                      join(want), elapsed, budget)};
}

Outcome criterion_table_k2() { return table_check(2, 6, 11, {31, 43, 57, 73, 91, 111}, kTableK2Budget); }

Outcome criterion_table_k3() { return table_check(3, 7, 12, {58, 85, 110, 137, 167, 200}, kTableK3Budget); }

Outcome criterion_table_k4_k5() {
  const auto k4 = table_dimensions(4, 7, 10);
  const auto k5 = table_dimensions(5, 8, 9);
  const std::vector<std::uint64_t> want4 = {63, 111, 147, 183};
  const std::vector<std::uint64_t> want5 = {127, 184};
  return {k4 == want4 && k5 == want5, fmt::format("k=4 [{}] want [{}]; k=5 [{}] want [{}]", join(k4), join(want4),
                                                  join(k5), join(want5))};
}

Outcome criterion_defects() {
  struct Case {
    std::size_t h, k;
    std::uint64_t want;
  };
  bool ok = true;
  std::string detail;
  for (const Case c : {Case{7, 3, 5}, Case{8, 3, 1}, Case{8, 4, 4}}) {
    ss::SecantReport r = ss::secant_dimension_estimate(c.h, c.k, kSeed);
    ss::attach_known_certificate(r, kSeed);
    const std::uint64_t d = ss::defect(c.h, c.k, r.dimension);
    const bool certified = r.status == ss::SecantStatus::kCertifiedDefective;
    ok = ok && d == c.want && certified;
    detail += fmt::format("{}defect({},{})={} want {} {}", detail.empty() ? "" : "; ", c.h, c.k, d, c.want,
                          ss::to_string(r.status));
  }
  return {ok, detail};
}

Outcome criterion_rnc() {
  const auto v83 = ss::rnc_certificate(8, 3);
  const auto* span = v83.find("b");
  const auto v82 = ss::rnc_certificate(8, 2);
  const auto v123 = ss::rnc_certificate(12, 3);
  const bool ok = v83.status == ss::VerdictStatus::kDefectiveCertified && span && span->observed == 5 &&
                  v82.status == ss::VerdictStatus::kHypothesisFailed && v82.failed_check == "d" &&
                  v123.status == ss::VerdictStatus::kHypothesisFailed && v123.failed_check == "d";
  return {ok, fmt::format("rnc(8,3) {} span rank {}; rnc(8,2) fails {}; rnc(12,3) fails {}",
                          ss::to_string(v83.status), span ? span->observed : -1, v82.failed_check.value_or("-"),
                          v123.failed_check.value_or("-"))};
}

Outcome criterion_s7() {
  const auto start = Clock::now();
  const auto a = ss::s7_certificate(kSeed);
  const auto b = ss::s7_certificate(kSeed);
  const double elapsed = seconds_since(start) / 2;
  const auto* df = a.find("rank_df");
  const auto* tangent = a.find("tangent_rank");
  const auto* df_b = b.find("rank_df");
  const auto* tangent_b = b.find("tangent_rank");
  const bool same = df && df_b && tangent && tangent_b && df->observed == df_b->observed &&
                    tangent->observed == tangent_b->observed && a.note == b.note;
  const bool ok = a.status == ss::VerdictStatus::kDefectiveCertified && df && df->observed == 63 && tangent &&
                  tangent->observed == 59 && a.dimension == 58U && same && elapsed < kS7Budget;
  return {ok, fmt::format("rank_df={} tangent_rank={} dim={} deterministic={} {:.2f}s (limit {:.0f}s)",
                          df ? df->observed : -1, tangent ? tangent->observed : -1, a.dimension.value_or(0),
                          same ? "yes" : "no", elapsed, kS7Budget)};
}

Outcome criterion_base12() {
  const auto start = Clock::now();
  const auto a = ss::base12_certificate();
  const double elapsed = seconds_since(start);
  const auto b = ss::base12_certificate();
  const auto* rank = a.find("rank");
  const auto* cols = a.find("columns");
  const auto* rank_b = b.find("rank");
  const bool ok = a.status == ss::VerdictStatus::kNondefectiveCertified && rank && rank->observed == 201 && cols &&
                  cols->observed == 2048 && rank_b && rank_b->observed == rank->observed && elapsed < kBase12Budget;
  return {ok, fmt::format("rank {} of 201x{} {:.2f}s (limit {:.0f}s)", rank ? rank->observed : -1,
                          cols ? cols->observed : -1, elapsed, kBase12Budget)};
}

Outcome criterion_orbit_kernel() {
  bool ok = true;
  std::string detail;
  for (std::size_t h : {2, 4, 6, 8}) {
    const ss::OrbitKernel k = ss::orbit_kernel_dimensions(h);
    const std::size_t want = h * (h + 1) / 2;
    ok = ok && k.via_differential == want && k.via_symmetry == want;
    detail += fmt::format("{}h={}: {}/{} want {}", detail.empty() ? "" : "; ", h, k.via_differential,
                          k.via_symmetry, want);
  }
  return {ok, detail};
}

Outcome criterion_stability() {
  bool ok = true;
  std::string detail;
  for (std::size_t s : {12, 13, 14}) {
    const bool r = ss::stability_rank_check(s);
    ok = ok && r;
    detail += fmt::format("{}s={}: {}", detail.empty() ? "" : "; ", s, r);
  }
  return {ok, detail};
}

Outcome criterion_properties() {
  std::size_t failures = 0;
  std::size_t checks = 0;
  std::mt19937_64 rng(kSeed);

  for (std::size_t h = 2; h <= kPropertyMaxH; h += 2)
    for (int t = 0; t < kPropertyTrials; ++t) {
      const ss::SkewMatrix u = ss::random_skew(h, rng);
      const ss::Fp pf = ss::pfaffian(u);
      ++checks;
      if (pf * pf != ss::determinant(u.to_dense())) ++failures;
    }

  for (std::size_t h = 2; h <= kPropertyMaxH; ++h) {
    const auto subsets = ss::enumerate_even_subsets(h);
    for (int t = 0; t < kPropertyTrials; ++t) {
      const ss::SkewMatrix u = ss::random_skew(h, rng);
      const ss::EvenSubset k = subsets[rng() % subsets.size()];
      const std::size_t i = rng() % (h - 1);
      const std::size_t j = i + 1 + rng() % (h - 1 - i);
      ss::SkewMatrix shifted = u;
      shifted.set(i, j, u.at(i, j) + ss::Fp::raw(1));
      ++checks;
      if (ss::pfaffian_partial(u, k, i, j) != ss::sub_pfaffian(shifted, k) - ss::sub_pfaffian(u, k)) ++failures;
    }
  }

  for (std::size_t h = 1; h <= kOriginMaxH; ++h) {
    const auto s = ss::spinor_coordinates(ss::SkewMatrix::zero(h));
    bool unit = s.coords.size() == ss::spinor_length(h) && s.coords[0] == ss::Fp::raw(1);
    for (std::size_t c = 1; c < s.coords.size(); ++c) unit = unit && s.coords[c].is_zero();
    ++checks;
    if (!unit) ++failures;
  }

  std::size_t skipped = 0;
  for (std::size_t h = 2; h <= kPropertyMaxH; ++h)
    for (std::size_t k = 1; k <= kInvarianceMaxK; ++k) {
      std::vector<ss::SkewMatrix> points;
      for (std::size_t i = 0; i < k; ++i) points.push_back(ss::random_skew(h, rng));
      const std::size_t before = ss::stacked_tangent_rank(points);
      for (int used = 0; used < kInvarianceElements;) {
        const ss::OrthogonalElement g = ss::random_orthogonal(h, rng);
        std::vector<ss::SkewMatrix> moved;
        try {
          for (const auto& u : points) moved.push_back(ss::act_on_chart(g, u));
        } catch (const ss::Error&) {
          ++skipped;
          continue;
        }
        ++used;
        ++checks;
        if (ss::stacked_tangent_rank(moved) != before) ++failures;
      }
    }

  return {failures == 0,
          fmt::format("{} checks, {} failures, {} group elements off-chart and redrawn", checks, failures, skipped)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"table k=2", criterion_table_k2},
      {"table k=3", criterion_table_k3},
      {"tables k=4 and k=5", criterion_table_k4_k5},
      {"defects", criterion_defects},
      {"curve certificate", criterion_rnc},
      {"S_7 certificate", criterion_s7},
      {"h=12 base certificate", criterion_base12},
      {"orbit kernel", criterion_orbit_kernel},
      {"stability rank", criterion_stability},
      {"property suites", criterion_properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.ok) ++failed;
    fmt::print("{} {:>2} {}: {}\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail);
  }
  fmt::print("{} of {} criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
