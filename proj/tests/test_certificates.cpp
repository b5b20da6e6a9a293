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

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "spinor_secant/certificates.hpp"
#include "spinor_secant/orthogonal.hpp"
#include "test_support.hpp"

namespace spinor_secant {
namespace {

std::int64_t observed(const CertificateVerdict& v, std::string_view label) {
  const CertificateCheck* c = v.find(label);
  EXPECT_NE(c, nullptr) << label;
  return c ? c->observed : -1;
}

TEST(RncTest, EightThreeIsDefective) {
  const CertificateVerdict v = rnc_certificate(8, 3);
  EXPECT_EQ(v.status, VerdictStatus::kDefectiveCertified);
  EXPECT_TRUE(v.passed());
  EXPECT_FALSE(v.failed_check.has_value());
  EXPECT_EQ(observed(v, "b"), 5);
  for (const char* label : {"a", "b", "c", "d", "e"}) EXPECT_TRUE(v.find(label)->ok) << label;
}

TEST(RncTest, HypothesisDFails) {
  for (const auto& [h, k] : {std::pair{8, 2}, std::pair{12, 3}}) {
    const CertificateVerdict v = rnc_certificate(h, k);
    EXPECT_EQ(v.status, VerdictStatus::kHypothesisFailed);
    ASSERT_TRUE(v.failed_check.has_value());
    EXPECT_EQ(*v.failed_check, "d");
  }
}

TEST(RncTest, HypothesisCFails) {
  const CertificateVerdict v = rnc_certificate(6, 3);
  EXPECT_EQ(v.status, VerdictStatus::kHypothesisFailed);
  EXPECT_EQ(*v.failed_check, "c");
}

TEST(RncTest, CurveCoordinatesAreMonomials) {
  for (std::size_t m = 1; m <= 6; ++m) {
    const CertificateVerdict v = rnc_certificate(2 * m, 3);
    const CertificateCheck* a = v.find("a");
    ASSERT_NE(a, nullptr);
    EXPECT_TRUE(a->ok) << "m=" << m;
    const CertificateCheck* b = v.find("b");
    ASSERT_NE(b, nullptr);
    EXPECT_EQ(b->observed, static_cast<std::int64_t>(m + 1));
  }
}

TEST(RncTest, Errors) {
  EXPECT_ERROR_CODE((void)rnc_certificate(7, 3), ErrorCode::kOddSize);
  EXPECT_THROW((void)rnc_certificate(8, 1), std::invalid_argument);
}

TEST(S7Test, RanksAndDimension) {
  const CertificateVerdict v = s7_certificate(0);
  ASSERT_EQ(v.status, VerdictStatus::kDefectiveCertified);
  EXPECT_EQ(observed(v, "rank_df"), 63);
  EXPECT_EQ(observed(v, "tangent_rank"), 59);
  EXPECT_EQ(v.dimension, 58U);
  EXPECT_EQ(v.defect, 5U);
}

TEST(S7Test, DeterministicGivenSeed) {
  const CertificateVerdict a = s7_certificate(123);
  const CertificateVerdict b = s7_certificate(123);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].observed, b.checks[i].observed);
  EXPECT_EQ(a.note, b.note);
}

TEST(S7Test, EqualPointsAreNotGeneral) {
  const SkewMatrix o = SkewMatrix::zero(7);
  EXPECT_EQ(triple_differential_rank(7, o, o, o), 21U);
}

TEST(Base12Test, FullRank) {
  const CertificateVerdict v = base12_certificate();
  EXPECT_EQ(v.status, VerdictStatus::kNondefectiveCertified);
  EXPECT_EQ(observed(v, "columns"), 2048);
  EXPECT_EQ(observed(v, "rank_o12"), 67);
  EXPECT_EQ(observed(v, "rank"), 201);
  EXPECT_EQ(v.dimension, 200U);
}

TEST(Base12Test, PointsAreAsDescribed) {
  const StandardTriple t = StandardTriple::base12();
  EXPECT_EQ(t.u0, SkewMatrix::zero(12));
  EXPECT_EQ(t.u1, SkewMatrix::standard_symplectic(12));
  for (std::size_t b = 0; b < 6; ++b) EXPECT_EQ(t.u2.at(2 * b, 2 * b + 1), Fp::raw(b + 2));
  EXPECT_EQ(t.u2, k6_matrix());
}

TEST(Base12Test, PaddedPointsStayIndependent) {
  // Same three points embedded in larger charts.
  const StandardTriple t = StandardTriple::base12();
  for (std::size_t h : {13, 14}) {
    const std::vector<SkewMatrix> points = {t.u0.padded(h), t.u1.padded(h), t.u2.padded(h)};
    EXPECT_EQ(stacked_tangent_rank(points), 3 * (chart_dimension(h) + 1)) << "h=" << h;
  }
}

TEST(StabilityTest, RankCondition) {
  for (std::size_t s : {12, 13, 14}) {
    EXPECT_TRUE(stability_rank_check(s)) << "s=" << s;
    const CertificateVerdict v = stability_certificate(s);
    EXPECT_EQ(v.status, VerdictStatus::kHolds);
  }
}

TEST(StabilityTest, MatrixShape) {
  const std::size_t s = 12;
  const DenseMatrix m = stability_matrix(s, SkewMatrix::standard_symplectic(12), k6_matrix());
  EXPECT_EQ(m.rows(), 2 * s);
  EXPECT_EQ(m.cols(), s * (s - 1) * (s - 2) / 6);
}

TEST(StabilityTest, DegeneratePoints) {
  const std::size_t s = 12;
  const SkewMatrix j = SkewMatrix::standard_symplectic(12);
  EXPECT_EQ(stability_rank(s, j, j), s);
  EXPECT_EQ(stability_rank(s, SkewMatrix::zero(s), SkewMatrix::zero(s)), 0U);
}

TEST(StabilityTest, RejectsSmallSize) {
  EXPECT_ERROR_CODE((void)stability_rank_check(11), ErrorCode::kSizeOutOfRange);
}

TEST(OrbitCertificateTest, Holds) {
  const CertificateVerdict v = orbit_certificate(6);
  EXPECT_EQ(v.status, VerdictStatus::kHolds);
}

TEST(AttachTest, UpgradesKnownDefects) {
  for (const auto& [h, k, dim] : {std::tuple{7, 3, 58}, std::tuple{8, 3, 85}, std::tuple{8, 4, 111}}) {
    SecantReport r = secant_dimension_estimate(h, k, 0);
    ASSERT_EQ(r.dimension, static_cast<std::uint64_t>(dim));
    attach_known_certificate(r, 0);
    EXPECT_EQ(r.status, SecantStatus::kCertifiedDefective) << h << " " << k;
    ASSERT_TRUE(r.certificate.has_value());
    EXPECT_FALSE(r.certificate->empty());
  }
  SecantReport r = secant_dimension_estimate(9, 3, 0);
  attach_known_certificate(r, 0);
  EXPECT_EQ(r.status, SecantStatus::kCertifiedNondefective);
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(AttachTest, ImplicationIsFlagged) {
  SecantReport r = secant_dimension_estimate(8, 4, 0);
  attach_known_certificate(r, 0);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_NE(r.certificate->find("dependent"), std::string::npos) << *r.certificate;
}

}  // namespace
}  // namespace spinor_secant
