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

#include "spdpriv/geometry.hpp"

#include <array>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "spdpriv/errors.hpp"
#include "support/random.hpp"

namespace spdpriv {
namespace {

using testing::random_spd;
using testing::random_sym;
using testing::relative_error;

Matrix mat2(double a, double b, double c, double d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

SpdMatrix diag2(double a, double b) {
  const std::array<double, 2> d{a, b};
  return SpdMatrix::diagonal(d);
}

TEST(SymMatrixTest, SymmetrizesSmallAsymmetry) {
  const SymMatrix s = SymMatrix::from(mat2(1.0, 2.0 + 1e-12, 2.0, 3.0));
  EXPECT_EQ(s(0, 1), s(1, 0));
  EXPECT_NEAR(s(0, 1), 2.0, 1e-12);
}

TEST(SymMatrixTest, RejectsAsymmetricAndNonSquare) {
  EXPECT_THROW(SymMatrix::from(mat2(1.0, 2.0, 2.1, 3.0)), DomainError);
  EXPECT_THROW(SymMatrix::from(Matrix::Zero(2, 3)), DimensionError);
  EXPECT_THROW(SymMatrix::from(Matrix(0, 0)), DimensionError);
}

TEST(SymMatrixTest, RejectsNonFinite) {
  EXPECT_THROW(SymMatrix::from(mat2(NAN, 0.0, 0.0, 1.0)), DomainError);
}

TEST(SymMatrixTest, EnforcesDimensionCap) {
  EXPECT_THROW(SymMatrix::zero(kMaxDim + 1), DimensionError);
}

TEST(SpdMatrixTest, RejectsIndefinite) {
  EXPECT_THROW(SpdMatrix::from(mat2(1.0, 2.0, 2.0, 1.0)), DomainError);
  EXPECT_THROW(SpdMatrix::from(mat2(1.0, 0.0, 0.0, 0.0)), DomainError);
  // Positive but below the relative admission threshold.
  EXPECT_THROW(SpdMatrix::from(mat2(1e6, 0.0, 0.0, 1e-7)), DomainError);
  EXPECT_NO_THROW(SpdMatrix::from(mat2(1e6, 0.0, 0.0, 1e-5)));
}

TEST(SymEigenTest, Identity) {
  const EigenDecomposition e = sym_eigen(SymMatrix::identity(3));
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(e.eigenvalues(i), 1.0);
  EXPECT_LT((e.basis.transpose() * e.basis - Matrix::Identity(3, 3)).norm(), 1e-10);
}

TEST(SymEigenTest, DiagonalAndHandComputed) {
  EigenDecomposition e = sym_eigen(SymMatrix::from(mat2(5.0, 0.0, 0.0, 2.0)));
  EXPECT_NEAR(e.eigenvalues(0), 2.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues(1), 5.0, 1e-14);
  e = sym_eigen(SymMatrix::from(mat2(2.0, 1.0, 1.0, 2.0)));
  EXPECT_NEAR(e.eigenvalues(0), 1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues(1), 3.0, 1e-14);
}

TEST(SymEigenTest, ReconstructsRandomInputs) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 7;
    const SymMatrix s = random_sym(rng, k);
    const EigenDecomposition e = sym_eigen(s);
    for (int i = 1; i < k; ++i) EXPECT_LE(e.eigenvalues(i - 1), e.eigenvalues(i));
    EXPECT_LT((e.basis.transpose() * e.basis - Matrix::Identity(k, k)).norm(), 1e-10);
    const Matrix back = e.basis * e.eigenvalues.asDiagonal() * e.basis.transpose();
    EXPECT_LT((back - s.entries()).norm() / s.frobenius_norm(), 1e-10);
  }
}

TEST(LogmTest, KnownValues) {
  EXPECT_LT(logm(SpdMatrix::identity(4)).frobenius_norm(), 1e-15);
  const SymMatrix l = logm(diag2(std::exp(2.0), 1.0));
  EXPECT_NEAR(l(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(l(1, 1), 0.0, 1e-14);
  EXPECT_NEAR(l(0, 1), 0.0, 1e-14);

  const SymMatrix m = logm(SpdMatrix::from(mat2(2.0, 1.0, 1.0, 2.0)));
  const double h = 0.5 * std::log(3.0);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) EXPECT_NEAR(m(i, j), h, 1e-14);
  }
}

TEST(ExpmTest, KnownValues) {
  const SpdMatrix id = expm(SymMatrix::zero(3));
  EXPECT_LT((id.entries() - Matrix::Identity(3, 3)).norm(), 1e-15);
  const std::array<double, 2> d{1.0, -1.0};
  const SpdMatrix e = expm(SymMatrix::diagonal(d));
  EXPECT_NEAR(e(0, 0), std::exp(1.0), 1e-14);
  EXPECT_NEAR(e(1, 1), std::exp(-1.0), 1e-15);
}

TEST(ExpmTest, Roundtrips) {
  Rng rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 6;
    const SymMatrix s = random_sym(rng, k);
    EXPECT_LT(relative_error(logm(expm(s)).entries(), s.entries()), 1e-8);
    const SpdMatrix x = random_spd(rng, k);
    EXPECT_LT(relative_error(expm(logm(x)).entries(), x.entries()), 1e-8);
  }
}

TEST(VecdTest, Definition) {
  const TangentVector v = vecd(SymMatrix::from(mat2(1.0, 2.0, 2.0, 3.0)));
  ASSERT_EQ(v.size(), 3);
  EXPECT_DOUBLE_EQ(v.coords()(0), 1.0);
  EXPECT_DOUBLE_EQ(v.coords()(1), 3.0);
  EXPECT_DOUBLE_EQ(v.coords()(2), 2.0 * std::sqrt(2.0));
  EXPECT_EQ(vecd(SymMatrix::zero(4)).coords(), Vector::Zero(10));
}

TEST(VecdTest, UpperTriangleIsRowMajor) {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = m(1, 0) = 1.0;
  m(0, 2) = m(2, 0) = 2.0;
  m(1, 2) = m(2, 1) = 3.0;
  const Vector c = vecd(SymMatrix::from(m)).coords();
  EXPECT_DOUBLE_EQ(c(3) / std::sqrt(2.0), 1.0);
  EXPECT_DOUBLE_EQ(c(4) / std::sqrt(2.0), 2.0);
  EXPECT_DOUBLE_EQ(c(5) / std::sqrt(2.0), 3.0);
}

TEST(VecdTest, IsometryAgainstEntrywiseSum) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 1 + trial % 9;
    const SymMatrix s = random_sym(rng, k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) sum += s(i, j) * s(i, j);
    }
    EXPECT_NEAR(vecd(s).coords().norm(), std::sqrt(sum), 1e-12 * std::max(1.0, sum));
  }
}

TEST(InvvecdTest, InverseAndRoundtrip) {
  Vector c(3);
  c << 1.0, 3.0, 2.0 * std::sqrt(2.0);
  const SymMatrix s = invvecd(TangentVector(2, c));
  EXPECT_NEAR(s(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(s(1, 1), 3.0, 1e-15);
  EXPECT_NEAR(s(0, 1), 2.0, 1e-15);
  EXPECT_NEAR(s(1, 0), 2.0, 1e-15);
  EXPECT_EQ(invvecd(TangentVector::zero(3)).frobenius_norm(), 0.0);

  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const SymMatrix x = random_sym(rng, 1 + trial % 8);
    const double scale = std::max(1.0, x.entries().cwiseAbs().maxCoeff());
    EXPECT_LE((invvecd(vecd(x)).entries() - x.entries()).cwiseAbs().maxCoeff(), 1e-15 * scale);
  }
}

TEST(InvvecdTest, LengthMismatch) {
  EXPECT_THROW(TangentVector(3, Vector::Zero(5)), DimensionError);
}

TEST(DistanceTest, KnownValuesAndMismatch) {
  Rng rng(1);
  const SpdMatrix x = random_spd(rng, 4);
  EXPECT_NEAR(le_distance(x, x), 0.0, 1e-14);
  EXPECT_NEAR(le_distance(diag2(std::exp(2.0), 1.0), SpdMatrix::identity(2)), 2.0, 1e-14);
  EXPECT_THROW(le_distance(SpdMatrix::identity(2), SpdMatrix::identity(3)), DimensionError);
}

TEST(DistanceTest, MetricAxioms) {
  Rng rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = 2 + trial % 5;
    const SpdMatrix a = random_spd(rng, k);
    const SpdMatrix b = random_spd(rng, k);
    const SpdMatrix c = random_spd(rng, k);
    EXPECT_EQ(le_distance(a, b), le_distance(b, a));
    EXPECT_LE(le_distance(a, c), le_distance(a, b) + le_distance(b, c) + 1e-10);
  }
}

TEST(VectorSpaceTest, KnownValues) {
  Rng rng(4);
  const SpdMatrix x = random_spd(rng, 3);
  EXPECT_LT((le_sub(x, x).entries() - Matrix::Identity(3, 3)).norm(), 1e-8);
  EXPECT_LT((le_scale(0.0, x).entries() - Matrix::Identity(3, 3)).norm(), 1e-8);

  const SpdMatrix inv = le_scale(-1.0, diag2(2.0, 1.0));
  EXPECT_NEAR(inv(0, 0), 0.5, 1e-14);
  EXPECT_NEAR(inv(1, 1), 1.0, 1e-14);

  const SpdMatrix sq = le_add(diag2(std::exp(1.0), 1.0), diag2(std::exp(1.0), 1.0));
  EXPECT_NEAR(sq(0, 0), std::exp(2.0), 1e-12);
  EXPECT_NEAR(sq(1, 1), 1.0, 1e-14);
}

TEST(VectorSpaceTest, CommutativeAndDimensionChecked) {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const SpdMatrix a = random_spd(rng, 4);
    const SpdMatrix b = random_spd(rng, 4);
    EXPECT_LT(relative_error(le_add(a, b).entries(), le_add(b, a).entries()), 1e-8);
  }
  EXPECT_THROW(le_add(SpdMatrix::identity(2), SpdMatrix::identity(3)), DimensionError);
}

TEST(FrechetMeanTest, ClosedFormCases) {
  Rng rng(8);
  const SpdMatrix x = random_spd(rng, 3);
  const std::vector<SpdMatrix> single{x};
  EXPECT_LT(relative_error(frechet_mean_le(single).entries(), x.entries()), 1e-12);
  const std::vector<SpdMatrix> triple{x, x, x};
  EXPECT_LT(relative_error(frechet_mean_le(triple).entries(), x.entries()), 1e-8);

  const std::vector<SpdMatrix> pair{diag2(std::exp(2.0), 1.0), SpdMatrix::identity(2)};
  const SpdMatrix m = frechet_mean_le(pair);
  EXPECT_NEAR(m(0, 0), std::exp(1.0), 1e-12);
  EXPECT_NEAR(m(1, 1), 1.0, 1e-12);
  EXPECT_NEAR(m(0, 1), 0.0, 1e-12);
}

TEST(FrechetMeanTest, Errors) {
  EXPECT_THROW(frechet_mean_le(std::vector<SpdMatrix>{}), DomainError);
  const std::vector<SpdMatrix> mixed{SpdMatrix::identity(2), SpdMatrix::identity(3)};
  EXPECT_THROW(frechet_mean_le(mixed), DimensionError);
}

TEST(FrechetMeanTest, EquivariantUnderTranslation) {
  Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + trial % 4;
    const SpdMatrix shift = random_spd(rng, k);
    std::vector<SpdMatrix> data;
    std::vector<SpdMatrix> moved;
    for (int i = 0; i < 5; ++i) {
      data.push_back(random_spd(rng, k));
      moved.push_back(le_add(data.back(), shift));
    }
    EXPECT_LT(relative_error(frechet_mean_le(moved).entries(),
                             le_add(frechet_mean_le(data), shift).entries()),
              1e-8);
  }
}

double cost(std::span<const SpdMatrix> data, const SpdMatrix& m) {
  double s = 0.0;
  for (const auto& x : data) s += std::pow(le_distance(x, m), 2);
  return s;
}

TEST(FrechetMeanTest, LocallyOptimal) {
  Rng rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const int k = 2 + trial % 2;
    const int n = 1 + trial % 5;
    std::vector<SpdMatrix> data;
    for (int i = 0; i < n; ++i) data.push_back(random_spd(rng, k));
    const SpdMatrix mean = frechet_mean_le(data);
    const double base = cost(data, mean);
    for (int dir = 0; dir < 10; ++dir) {
      SymMatrix step = random_sym(rng, k);
      step *= 1e-3 / step.frobenius_norm();
      const SpdMatrix moved = expm(logm(mean) + step);
      EXPECT_GE(cost(data, moved), base);
    }
  }
}

TEST(BallRadiusTest, KnownValues) {
  const SpdMatrix c = SpdMatrix::identity(2);
  const std::vector<SpdMatrix> only{c};
  EXPECT_NEAR(ball_radius(only, c), 0.0, 1e-15);
  const std::vector<SpdMatrix> two{c, diag2(std::exp(2.0), 1.0)};
  EXPECT_NEAR(ball_radius(two, c), 2.0, 1e-14);
  EXPECT_THROW(ball_radius(std::vector<SpdMatrix>{}, c), DomainError);
}

}  // namespace
}  // namespace spdpriv
