// Copyright 2026 The spdpriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spdpriv/sampling.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <gtest/gtest.h>

#include "spdpriv/errors.hpp"
#include "support/random.hpp"
#include "support/stats.hpp"

namespace spdpriv {
namespace {

using testing::random_spd;

TEST(GaussianVectorTest, ZeroSigmaReturnsMean) {
  Rng rng(1);
  Vector mean(3);
  mean << 1.0, -2.0, 0.5;
  EXPECT_EQ(gaussian_vector(rng, mean, 0.0), mean);
}

TEST(GaussianVectorTest, MomentsWithinStandardError) {
  Rng rng(2);
  std::vector<double> xs;
  for (int i = 0; i < 100000; ++i) xs.push_back(gaussian_vector(rng, Vector::Zero(1), 1.0)(0));
  EXPECT_NEAR(testing::mean(xs), 0.0, 0.01);
  EXPECT_NEAR(testing::sample_variance(xs), 1.0, 0.015);
}

TEST(GaussianVectorTest, Deterministic) {
  Rng a(3);
  Rng b(3);
  EXPECT_EQ(gaussian_vector(a, Vector::Zero(20), 2.0), gaussian_vector(b, Vector::Zero(20), 2.0));
}

TEST(GaussianVectorTest, RejectsNegativeSigma) {
  Rng rng(4);
  EXPECT_THROW(gaussian_vector(rng, Vector::Zero(2), -1.0), DomainError);
}

TEST(HaarTest, Orthogonal) {
  Rng rng(5);
  for (int k = 1; k <= 12; ++k) {
    const Matrix q = haar_orthogonal(rng, k);
    EXPECT_LE((q.transpose() * q - Matrix::Identity(k, k)).norm(), 1e-10);
  }
}

TEST(HaarTest, OneDimensionalSignIsFair) {
  Rng rng(6);
  int plus = 0;
  for (int i = 0; i < 10000; ++i) {
    const double q = haar_orthogonal(rng, 1)(0, 0);
    ASSERT_EQ(std::abs(q), 1.0);
    plus += q > 0 ? 1 : 0;
  }
  EXPECT_NEAR(plus / 10000.0, 0.5, 0.02);
}

TEST(HaarTest, FirstColumnAngleUniform) {
  Rng rng(7);
  std::vector<double> angles;
  for (int i = 0; i < 10000; ++i) {
    const Matrix q = haar_orthogonal(rng, 2);
    angles.push_back(std::atan2(q(1, 0), q(0, 0)));
  }
  const auto res = testing::ks_test(
      angles, [](double a) { return (a + std::numbers::pi) / (2.0 * std::numbers::pi); });
  EXPECT_GT(res.p_value, 0.01);
}

// Without the sign correction QR(G) is biased towards a positive diagonal.
TEST(HaarTest, DeterminantSignBalanced) {
  Rng rng(8);
  int positive = 0;
  for (int i = 0; i < 10000; ++i) positive += haar_orthogonal(rng, 3).determinant() > 0 ? 1 : 0;
  EXPECT_NEAR(positive / 10000.0, 0.5, 0.02);
}

TEST(LogGaussianTest, ZeroSigmaReturnsMean) {
  Rng rng(9);
  const SpdMatrix m = random_spd(rng, 3);
  EXPECT_EQ(sample_log_gaussian(rng, {m, 0.0}).entries(), m.entries());
}

TEST(LogGaussianTest, SquaredLogNormIsChiSquared) {
  for (int k : {2, 5}) {
    Rng rng(10 + k);
    const int d = tangent_dim(k);
    const double sigma = 0.7;
    std::vector<double> stats;
    for (int i = 0; i < 100000; ++i) {
      const SpdMatrix x = sample_log_gaussian(rng, {SpdMatrix::identity(k), sigma});
      stats.push_back(std::pow(logm(x).frobenius_norm() / sigma, 2));
    }
    EXPECT_NEAR(testing::mean(stats), d, 3.0 * std::sqrt(2.0 * d / 1e5));
    const boost::math::chi_squared chi(d);
    const auto gof =
        testing::chi_square_gof(stats, [&](double p) { return boost::math::quantile(chi, p); }, 50);
    EXPECT_GT(gof.p_value, 0.01) << "k=" << k;
  }
}

TEST(LogGaussianTest, InnerProductIsNormal) {
  Rng rng(20);
  const SpdMatrix c = random_spd(rng, 3);
  const SymMatrix lc = logm(c);
  const double sigma = 1.3;
  std::vector<double> xs;
  for (int i = 0; i < 100000; ++i) {
    const SymMatrix lx = logm(sample_log_gaussian(rng, {SpdMatrix::identity(3), sigma}));
    xs.push_back((lc.entries().array() * lx.entries().array()).sum());
  }
  const double sd = sigma * lc.frobenius_norm();
  EXPECT_NEAR(testing::mean(xs), 0.0, 3.0 * sd / std::sqrt(1e5));
  EXPECT_GT(testing::ks_test(xs, [&](double x) { return testing::normal_cdf(x / sd); }).p_value,
            0.01);
}

TEST(LogGaussianTest, TranslationMatchesShiftedMean) {
  Rng rng(21);
  const SpdMatrix m = random_spd(rng, 3);
  const Vector lm = vecd(logm(m)).coords();
  std::vector<double> shifted;
  std::vector<double> direct;
  for (int i = 0; i < 10000; ++i) {
    const SpdMatrix a = le_add(sample_log_gaussian(rng, {SpdMatrix::identity(3), 0.5}), m);
    shifted.push_back((vecd(logm(a)).coords() - lm).norm());
    const SpdMatrix b = sample_log_gaussian(rng, {m, 0.5});
    direct.push_back((vecd(logm(b)).coords() - lm).norm());
  }
  EXPECT_GT(testing::ks_two_sample(shifted, direct).p_value, 0.01);
}

TEST(LogDensityTest, OneDimensionalLogNormal) {
  for (double x : {0.3, 1.0, 2.5}) {
    const SpdMatrix xm = SpdMatrix::from(Matrix::Constant(1, 1, x));
    const double expected =
        -std::log(x) - 0.5 * std::log(2.0 * std::numbers::pi) - 0.5 * std::pow(std::log(x), 2);
    EXPECT_NEAR(log_gaussian_logdensity(xm, {SpdMatrix::identity(1), 1.0}), expected, 1e-13);
  }
}

TEST(LogDensityTest, JacobianCancelsInRatio) {
  Rng rng(22);
  const SpdMatrix x = random_spd(rng, 3);
  const SpdMatrix m1 = random_spd(rng, 3);
  const SpdMatrix m2 = random_spd(rng, 3);
  const double sigma = 0.8;
  const double ratio =
      log_gaussian_logdensity(x, {m1, sigma}) - log_gaussian_logdensity(x, {m2, sigma});
  const double q1 = std::pow(le_distance(x, m1), 2);
  const double q2 = std::pow(le_distance(x, m2), 2);
  EXPECT_NEAR(ratio, (q2 - q1) / (2.0 * sigma * sigma), 1e-10);
}

TEST(LogDensityTest, JacobianMatchesFiniteDifferences) {
  // |det d vecd(logm X) / d vecd(X)| computed numerically.
  Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const int k = 2 + trial % 3;
    const int d = tangent_dim(k);
    const SpdMatrix x = random_spd(rng, k, 0.6);
    const Vector base = vecd(x.as_sym()).coords();
    Matrix jac(d, d);
    const double h = 1e-6;
    for (int c = 0; c < d; ++c) {
      Vector plus = base;
      Vector minus = base;
      plus(c) += h;
      minus(c) -= h;
      const Vector fp = log_coordinates(SpdMatrix::from(invvecd({k, plus}).entries())).coords();
      const Vector fm = log_coordinates(SpdMatrix::from(invvecd({k, minus}).entries())).coords();
      jac.col(c) = (fp - fm) / (2.0 * h);
    }
    EXPECT_NEAR(log_jacobian(x), std::log(std::abs(jac.determinant())), 1e-6);
  }
}

TEST(LogDensityTest, EqualEigenvaluesUseLimit) {
  const Vector mu = Vector::Constant(3, 0.4);
  Vector near = mu;
  near(1) += 1e-7;
  EXPECT_NEAR(log_jacobian_from_log_spectrum(mu), log_jacobian_from_log_spectrum(near), 1e-6);
  // Scalar matrix cI: every h term is 1/c, det is c^k.
  EXPECT_NEAR(log_jacobian_from_log_spectrum(mu), -3.0 * 0.4 - 3.0 * 0.4, 1e-12);
}

TEST(LogDensityTest, RejectsMismatchedDimension) {
  EXPECT_THROW(log_gaussian_logdensity(SpdMatrix::identity(2), {SpdMatrix::identity(3), 1.0}),
               DimensionError);
}

// Mass of a box in vecd(X) coordinates, by midpoint quadrature of the density
// and by the sampling histogram.
TEST(LogDensityTest, QuadratureMatchesSampling) {
  Matrix mm(2, 2);
  mm << 1.4, 0.3, 0.3, 0.9;
  const LogGaussianParams params{SpdMatrix::from(mm), 0.35};
  const Vector center = vecd(params.mean.as_sym()).coords();
  const Vector half = Vector::Constant(3, 0.35);

  const int g = 40;
  double mass = 0.0;
  const Vector cell = 2.0 * half / g;
  for (int a = 0; a < g; ++a) {
    for (int b = 0; b < g; ++b) {
      for (int c = 0; c < g; ++c) {
        Vector v = center - half;
        v(0) += (a + 0.5) * cell(0);
        v(1) += (b + 0.5) * cell(1);
        v(2) += (c + 0.5) * cell(2);
        const SymMatrix s = invvecd({2, v});
        if (s(0, 0) * s(1, 1) - s(0, 1) * s(0, 1) <= 0 || s(0, 0) <= 0) continue;
        mass += std::exp(log_gaussian_logdensity(SpdMatrix::from(s), params));
      }
    }
  }
  mass *= cell.prod();

  Rng rng(24);
  const int n = 100000;
  int inside = 0;
  for (int i = 0; i < n; ++i) {
    const Vector v = vecd(sample_log_gaussian(rng, params).as_sym()).coords() - center;
    inside += (v.cwiseAbs().array() <= half.array()).all() ? 1 : 0;
  }
  const double empirical = static_cast<double>(inside) / n;
  ASSERT_GT(empirical, 0.1);
  EXPECT_NEAR(mass / empirical, 1.0, 0.05);
}

TEST(SyntheticTest, InsideBall) {
  Rng rng(25);
  for (int i = 0; i < 1000; ++i) {
    const SpdMatrix x = sample_synthetic_spd(rng, 5, 0.25);
    EXPECT_LE(le_distance(x, SpdMatrix::identity(5)), std::sqrt(5.0) / 4.0 + 1e-12);
  }
}

TEST(SyntheticTest, TinyRadiusNearIdentity) {
  Rng rng(26);
  const SpdMatrix x = sample_synthetic_spd(rng, 4, 1e-12);
  EXPECT_LE((x.entries() - Matrix::Identity(4, 4)).norm(), 1e-10);
}

TEST(SyntheticTest, EigenvaluesUniform) {
  Rng rng(27);
  const double r = 0.5;
  const double lo = std::exp(-r);
  const double hi = std::exp(r);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(sample_synthetic_spd(rng, 1, r)(0, 0));
  const auto res = testing::ks_test(xs, [&](double x) { return (x - lo) / (hi - lo); });
  EXPECT_GT(res.p_value, 0.01);
}

TEST(SyntheticTest, RejectsBadArguments) {
  Rng rng(28);
  EXPECT_THROW(sample_synthetic_spd(rng, 0, 0.1), DimensionError);
  EXPECT_THROW(sample_synthetic_spd(rng, 2, 0.0), DomainError);
}

}  // namespace
}  // namespace spdpriv
