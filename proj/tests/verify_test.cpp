// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mubkit/verify.hpp"

#include <random>

#include <gtest/gtest.h>

#include "mubkit/mub.hpp"
#include "oracles.hpp"
#include "reference_data.hpp"

namespace mubkit {
namespace {

TEST(CheckOrthonormal, Examples) {
  const VerifyReport id = check_orthonormal(CMatrix::Identity(5, 5), 1e-12);
  EXPECT_TRUE(id.passed);
  EXPECT_EQ(id.checks.at(0).worst_deviation, 0);

  CMatrix dup = CMatrix::Identity(3, 3);
  dup.col(2) = dup.col(1);
  EXPECT_FALSE(check_orthonormal(dup, 1e-6).passed);

  const Eigen::MatrixXcd b3 = fixtures::d4_bases_rows()[3].transpose();
  EXPECT_LE(check_orthonormal(b3, 1e-12).checks.at(0).worst_deviation, 1e-15);
}

TEST(CheckUnbiasedPair, Examples) {
  const auto b = fixtures::d4_bases_rows();
  const VerifyReport r = check_unbiased_pair(b[1].transpose(), b[2].transpose(), 1e-12);
  EXPECT_TRUE(r.passed);
  EXPECT_LE(r.checks.at(0).worst_deviation, 1e-12);
  const VerifyReport self = check_unbiased_pair(b[1].transpose(), b[1].transpose(), 1e-6);
  EXPECT_FALSE(self.passed);
  EXPECT_NEAR(self.checks.at(0).worst_deviation, 0.5, 1e-12);
}

TEST(CheckUnbiasedPair, RandomUnitariesFail) {
  std::mt19937_64 rng(2718);
  int passing = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto u = oracle::random_unitary(4, rng), v = oracle::random_unitary(4, rng);
    passing += check_unbiased_pair(u, v, 1e-6).passed;
  }
  EXPECT_EQ(passing, 0);
}

TEST(CheckUnbiasedPair, SymmetricUnderSwap) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto u = oracle::random_unitary(5, rng), v = oracle::random_unitary(5, rng);
    EXPECT_EQ(check_unbiased_pair(u, v, 1e-6).checks.at(0).worst_deviation,
              check_unbiased_pair(v, u, 1e-6).checks.at(0).worst_deviation);
  }
  const MubSet s = prime_mub(7);
  EXPECT_NEAR(check_unbiased_pair(s.bases[2], s.bases[5], 1e-9).checks.at(0).worst_deviation,
              check_unbiased_pair(s.bases[5], s.bases[2], 1e-9).checks.at(0).worst_deviation, 1e-15);
}

TEST(CheckMubSet, Examples) {
  const MubSet seven = prime_mub(7);
  const VerifyReport r7 = check_mub_set(seven, 1e-9);
  EXPECT_TRUE(r7.passed);
  ASSERT_NE(r7.find("unbiased"), nullptr);
  EXPECT_EQ(r7.find("unbiased")->checked, 28u * 49u);
  EXPECT_NEAR(r7.find("unbiased")->worst_deviation, oracle::brute_unbiased_deviation(seven.bases), 1e-14);

  EXPECT_TRUE(check_mub_set(primepower_mub(2, 2, Method::kP2Quadratic, SpectralConfig{}), 1e-9).passed);

  MubSet six = primepower_mub(2, 2, Method::kP2Quadratic, SpectralConfig{});
  six.bases.push_back(six.bases[1]);
  const VerifyReport r6 = check_mub_set(six, 1e300);
  EXPECT_FALSE(r6.passed);
  EXPECT_FALSE(r6.find("structure")->passed);
}

TEST(CheckMubSet, DefectLocation) {
  MubSet s = prime_mub(5);
  s.bases[3].col(2) *= 1.01;
  const VerifyReport r = check_mub_set(s, 1e-9);
  EXPECT_FALSE(r.passed);
  const CheckRecord* o = r.find("orthonormal");
  EXPECT_NEAR(o->worst_deviation, 1.01 * 1.01 - 1, 1e-12);
  EXPECT_EQ(o->location, (std::vector<std::size_t>{3, 2, 2}));
}

TEST(CheckMubSet, SpotChecksAboveExhaustiveLimit) {
  const MubSet s = prime_mub(67);
  VerifyOptions opt;
  opt.spot_samples = 2000;
  const VerifyReport r = check_mub_set(s, 1e-9, opt);
  EXPECT_TRUE(r.passed);
  const CheckRecord* u = r.find("unbiased");
  EXPECT_LT(u->coverage, 1.0);
  EXPECT_GT(u->coverage, 0.0);
  opt.exhaustive_limit = 67;
  EXPECT_EQ(check_mub_set(s, 1e-9, opt).find("unbiased")->coverage, 1.0);
}

TEST(CheckMubSet, UpperBoundRejectsExtraBases) {
  for (std::uint64_t d : {2u, 3u}) {
    MubSet s = prime_mub(d);
    s.bases.push_back(s.bases.back());
    EXPECT_FALSE(check_mub_set(s, 1e300).find("structure")->passed);
  }
}

TEST(MubToClasses, StandardBasisGivesClockMatrix) {
  for (std::uint64_t d : {2u, 3u, 5u}) {
    const auto classes = mub_to_classes(prime_mub(d));
    const CMatrix& u1 = classes[0][1];
    ASSERT_EQ(classes[0].size(), d);
    for (std::uint64_t k = 0; k < d; ++k) {
      EXPECT_LE(std::abs(u1(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) -
                         root_of_unity(static_cast<std::int64_t>(k + 1), static_cast<std::int64_t>(d))), 1e-12);
    }
    EXPECT_LE((u1 - CMatrix(u1.diagonal().asDiagonal())).cwiseAbs().maxCoeff(), 1e-15);
  }
}

// Each realized class commutes with exactly the matching operator of the construction.
TEST(MubToClasses, QutritClassesRealizeClockAndShiftFamily) {
  const auto classes = mub_to_classes(prime_mub(3));
  ASSERT_EQ(classes.size(), 4u);
  std::vector<CMatrix> ops{weyl_matrix(3, 0, 1)};
  for (int k = 0; k < 3; ++k) ops.push_back(weyl_matrix(3, 1, k));
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_LE((classes[j][0] - CMatrix::Identity(3, 3)).cwiseAbs().maxCoeff(), 1e-12);
    for (std::size_t k = 0; k < 4; ++k) {
      const double comm = (classes[j][1] * ops[k] - ops[k] * classes[j][1]).cwiseAbs().maxCoeff();
      EXPECT_EQ(comm < 1e-9, j == k) << j << " " << k;
    }
    // Same spectrum as the construction's operator (cube roots of unity).
    Eigen::ComplexEigenSolver<CMatrix> es(classes[j][1]);
    for (int c = 0; c < 3; ++c) EXPECT_NEAR(std::abs(std::pow(es.eigenvalues()(c), 3) - 1.0), 0, 1e-9);
  }
}

// Gram comparison: each realized class spans the same operator subspace as a displayed class.
TEST(MubToClasses, FourDimensionalClassesSpanDisplayedClasses) {
  const auto classes = mub_to_classes(primepower_mub(2, 2, Method::kP2Quadratic, SpectralConfig{}));
  const auto labels = fixtures::d4_classes();
  for (std::size_t j = 0; j < 5; ++j) {
    Eigen::MatrixXcd realized(16, 3), shown(16, 3);
    for (int t = 1; t < 4; ++t) realized.col(t - 1) = classes[j][static_cast<std::size_t>(t)].reshaped() / 2.0;
    for (int t = 0; t < 3; ++t) shown.col(t) = to_matrix(fixtures::qubit_label(labels[j][static_cast<std::size_t>(t)])).reshaped() / 2.0;
    // Projection of each realized vector onto span(shown) keeps its full norm.
    const Eigen::MatrixXcd overlap = shown.adjoint() * realized;
    for (int t = 0; t < 3; ++t) EXPECT_NEAR(overlap.col(t).norm(), 1.0, 1e-9) << "class " << j;
  }
}

TEST(MubToClasses, RejectsUnverifiedInput) {
  MubSet s = prime_mub(3);
  s.bases[1](0, 0) *= 2.0;
  EXPECT_THROW(mub_to_classes(s), std::invalid_argument);
}

TEST(CheckOrthogonalClasses, PrimeExamples) {
  for (std::uint64_t d : {3u, 5u}) {
    const VerifyReport r = check_orthogonal_classes(mub_to_classes(prime_mub(d)), 1e-9);
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.find("pairwise_orthogonal")->checked, d * d);
    EXPECT_EQ(r.find("structure")->checked, d * d);
  }
}

TEST(CheckOrthogonalClasses, AgreesWithBruteForceTraces) {
  const auto classes = mub_to_classes(prime_mub(3));
  std::vector<CMatrix> all{classes[0][0]};
  for (const auto& c : classes)
    for (std::size_t t = 1; t < c.size(); ++t) all.push_back(c[t]);
  double worst = 0;
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j)
      worst = std::max(worst, std::abs(oracle::direct_trace_inner(all[i], all[j]) - (i == j ? 3.0 : 0.0)) / 3.0);
  EXPECT_NEAR(check_orthogonal_classes(classes, 1e-9).find("pairwise_orthogonal")->worst_deviation, worst, 1e-14);
}

TEST(CheckOrthogonalClasses, RejectsOversizedCommutingSet) {
  const CMatrix z = weyl_matrix(2, 0, 1);
  const VerifyReport r = check_orthogonal_classes({{CMatrix::Identity(2, 2), z, CMatrix(-z)}}, 1e-9);
  EXPECT_FALSE(r.passed);
  EXPECT_FALSE(r.find("pairwise_orthogonal")->passed);

  std::vector<std::vector<CMatrix>> too_many(4, {CMatrix::Identity(2, 2), z});
  EXPECT_FALSE(check_orthogonal_classes(too_many, 1e300).find("structure")->passed);
  EXPECT_FALSE(check_orthogonal_classes({{CMatrix::Identity(2, 2), weyl_matrix(2, 1, 0), z}}, 1e-9).find("commuting")->passed);
}

TEST(RootOfUnitySum, VanishesForProperFractions) {
  for (std::int64_t n = 2; n <= 64; ++n) {
    for (std::int64_t m = 1; m < n; ++m) ASSERT_LE(std::abs(root_of_unity_sum(m, n)), 1e-10) << m << "/" << n;
    EXPECT_NEAR(std::abs(root_of_unity_sum(n, n) - static_cast<double>(n)), 0, 1e-10);
  }
}

TEST(RoundTrip, AllConstructionsUpTo32) {
  struct Case {
    std::uint32_t p, m;
    Method method;
  };
  std::vector<Case> cases;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) cases.push_back({p, 1, Method::kPrimeFormula});
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 2}, {5, 2}})
    cases.push_back({p, m, Method::kP2Quadratic});
  for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {3, 2}, {3, 3}, {5, 2}})
    cases.push_back({p, m, Method::kFieldTrace});
  for (const auto& c : cases) {
    const MubSet s = primepower_mub(c.p, c.m, c.method, SpectralConfig{});
    const std::uint64_t d = s.dim;
    EXPECT_LE(1 + s.bases.size() * (d - 1), d * d);
    const VerifyReport r = check_orthogonal_classes(mub_to_classes(s), 1e-9);
    EXPECT_TRUE(r.passed) << "p=" << c.p << " m=" << c.m << " " << method_name(c.method);
    EXPECT_EQ(r.find("pairwise_orthogonal")->checked, d * d);
  }
}

}  // namespace
}  // namespace mubkit
