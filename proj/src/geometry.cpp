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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "spdpriv/errors.hpp"

namespace spdpriv {
namespace {

void check_dim(Eigen::Index rows, Eigen::Index cols) {
  if (rows != cols) {
    throw DimensionError("matrix must be square, got " + std::to_string(rows) +
                         "x" + std::to_string(cols));
  }
  if (rows < 1 || rows > kMaxDim) {
    throw DimensionError("matrix dimension " + std::to_string(rows) +
                         " outside [1, " + std::to_string(kMaxDim) + "]");
  }
}

void check_same_dim(int a, int b) {
  if (a != b) {
    throw DimensionError("dimension mismatch: " + std::to_string(a) + " vs " +
                         std::to_string(b));
  }
}

Matrix symmetrized(const Matrix& m) { return 0.5 * (m + m.transpose()); }

// U * diag(f(lambda)) * U^T, symmetrized to remove rounding asymmetry.
template <typename F>
Matrix spectral_apply(const EigenDecomposition& eig, F f) {
  const Vector mapped = eig.eigenvalues.unaryExpr(f);
  const Matrix out =
      eig.basis * mapped.asDiagonal() * eig.basis.transpose();
  return symmetrized(out);
}

bool admissible(const Vector& eigenvalues) {
  const double lo = eigenvalues(0);
  const double hi = eigenvalues(eigenvalues.size() - 1);
  return lo > kSpdTolerance * std::max(1.0, hi);
}

}  // namespace

SymMatrix SymMatrix::from(const Matrix& m) {
  check_dim(m.rows(), m.cols());
  if (!m.allFinite()) throw DomainError("matrix has non-finite entries");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > kSymmetryTolerance * scale) {
    std::ostringstream msg;
    msg << "matrix is not symmetric (max asymmetry " << asym << ")";
    throw DomainError(msg.str());
  }
  return SymMatrix(symmetrized(m));
}

SymMatrix SymMatrix::zero(int k) {
  check_dim(k, k);
  return SymMatrix(Matrix::Zero(k, k));
}

SymMatrix SymMatrix::identity(int k) {
  check_dim(k, k);
  return SymMatrix(Matrix::Identity(k, k));
}

SymMatrix SymMatrix::diagonal(std::span<const double> diag) {
  const auto k = static_cast<Eigen::Index>(diag.size());
  check_dim(k, k);
  Matrix m = Matrix::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) m(i, i) = diag[i];
  return from(m);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& other) {
  check_same_dim(dim(), other.dim());
  m_ += other.m_;
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& other) {
  check_same_dim(dim(), other.dim());
  m_ -= other.m_;
  return *this;
}

SymMatrix& SymMatrix::operator*=(double a) {
  m_ *= a;
  return *this;
}

SpdMatrix SpdMatrix::from(const Matrix& m) { return from(SymMatrix::from(m)); }

SpdMatrix SpdMatrix::from(const SymMatrix& s) {
  EigenDecomposition eig = sym_eigen(s);
  if (!admissible(eig.eigenvalues)) {
    std::ostringstream msg;
    msg << "not positive definite (smallest eigenvalue "
        << eig.eigenvalues(0) << ", largest "
        << eig.eigenvalues(eig.eigenvalues.size() - 1) << ")";
    throw DomainError(msg.str());
  }
  return SpdMatrix(s.entries(), std::move(eig));
}

SpdMatrix SpdMatrix::from_eigen(Vector eigenvalues, Matrix basis) {
  const auto k = eigenvalues.size();
  check_dim(basis.rows(), basis.cols());
  check_same_dim(static_cast<int>(k), static_cast<int>(basis.rows()));
  if (!eigenvalues.allFinite() || !basis.allFinite()) {
    throw DomainError("eigendecomposition has non-finite entries");
  }
  if ((eigenvalues.array() <= 0.0).any()) {
    throw DomainError("not positive definite (non-positive eigenvalue)");
  }
  const double orth_err =
      (basis.transpose() * basis - Matrix::Identity(k, k)).norm();
  if (orth_err > 1e-10) {
    throw DomainError("eigenbasis is not orthogonal (error " +
                      std::to_string(orth_err) + ")");
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(k));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    return eigenvalues(a) < eigenvalues(b);
  });
  EigenDecomposition eig{Vector(k), Matrix(k, k)};
  for (Eigen::Index i = 0; i < k; ++i) {
    eig.eigenvalues(i) = eigenvalues(order[static_cast<std::size_t>(i)]);
    eig.basis.col(i) = basis.col(order[static_cast<std::size_t>(i)]);
  }
  Matrix m = spectral_apply(eig, [](double v) { return v; });
  return SpdMatrix(std::move(m), std::move(eig));
}

SpdMatrix SpdMatrix::identity(int k) {
  check_dim(k, k);
  return SpdMatrix(Matrix::Identity(k, k),
                   EigenDecomposition{Vector::Ones(k), Matrix::Identity(k, k)});
}

SpdMatrix SpdMatrix::diagonal(std::span<const double> diag) {
  return from(SymMatrix::diagonal(diag));
}

TangentVector::TangentVector(int k, Vector coords)
    : k_(k), coords_(std::move(coords)) {
  if (k < 1 || coords_.size() != tangent_dim(k)) {
    throw DimensionError("tangent vector has " +
                         std::to_string(coords_.size()) +
                         " coordinates, expected k(k+1)/2 = " +
                         std::to_string(tangent_dim(std::max(k, 0))) +
                         " for k = " + std::to_string(k));
  }
}

EigenDecomposition sym_eigen(const SymMatrix& s) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(s.entries(),
                                               Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "symmetric eigensolver did not converge (k = " << s.dim()
        << ", ||S||_F = " << s.frobenius_norm() << ", iteration cap "
        << Eigen::SelfAdjointEigenSolver<Matrix>::m_maxIterations
        << " sweeps per eigenvalue)";
    throw NumericalError(msg.str());
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

SymMatrix logm(const SpdMatrix& x) {
  return SymMatrix::from(
      spectral_apply(x.eigen(), [](double v) { return std::log(v); }));
}

SpdMatrix expm(const SymMatrix& s) {
  EigenDecomposition eig = sym_eigen(s);
  Vector mapped = eig.eigenvalues.unaryExpr([](double v) { return std::exp(v); });
  if (!mapped.allFinite() || mapped(0) <= 0.0) {
    std::ostringstream msg;
    msg << "matrix exponential out of floating range (eigenvalues in ["
        << eig.eigenvalues(0) << ", "
        << eig.eigenvalues(eig.eigenvalues.size() - 1) << "])";
    throw NumericalError(msg.str());
  }
  return SpdMatrix::from_eigen(std::move(mapped), std::move(eig.basis));
}

TangentVector vecd(const SymMatrix& s) {
  const int k = s.dim();
  Vector v(tangent_dim(k));
  for (int i = 0; i < k; ++i) v(i) = s(i, i);
  int idx = k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) v(idx++) = std::sqrt(2.0) * s(i, j);
  }
  return {k, std::move(v)};
}

SymMatrix invvecd(const TangentVector& v) {
  const int k = v.ambient_dim();
  Matrix m(k, k);
  const Vector& c = v.coords();
  for (int i = 0; i < k; ++i) m(i, i) = c(i);
  int idx = k;
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      const double off = c(idx++) / std::sqrt(2.0);
      m(i, j) = off;
      m(j, i) = off;
    }
  }
  return SymMatrix::from(m);
}

TangentVector log_coordinates(const SpdMatrix& x) { return vecd(logm(x)); }

SpdMatrix from_log_coordinates(const TangentVector& v) {
  return expm(invvecd(v));
}

double le_distance(const SpdMatrix& x1, const SpdMatrix& x2) {
  check_same_dim(x1.dim(), x2.dim());
  return (logm(x1).entries() - logm(x2).entries()).norm();
}

SpdMatrix le_add(const SpdMatrix& x1, const SpdMatrix& x2) {
  check_same_dim(x1.dim(), x2.dim());
  return expm(logm(x1) + logm(x2));
}

SpdMatrix le_sub(const SpdMatrix& x1, const SpdMatrix& x2) {
  check_same_dim(x1.dim(), x2.dim());
  return expm(logm(x1) - logm(x2));
}

SpdMatrix le_scale(double a, const SpdMatrix& x) { return expm(a * logm(x)); }

SpdMatrix frechet_mean_le(std::span<const SpdMatrix> dataset) {
  if (dataset.empty()) throw DomainError("Frechet mean of an empty dataset");
  const int k = dataset.front().dim();
  if (dataset.size() == 1) return dataset.front();
  Matrix acc = Matrix::Zero(k, k);
  for (const SpdMatrix& x : dataset) {
    check_same_dim(k, x.dim());
    acc += logm(x).entries();
  }
  acc /= static_cast<double>(dataset.size());
  return expm(SymMatrix::from(acc));
}

double ball_radius(std::span<const SpdMatrix> dataset, const SpdMatrix& center) {
  if (dataset.empty()) throw DomainError("ball radius of an empty dataset");
  const Matrix log_center = logm(center).entries();
  double r = 0.0;
  for (const SpdMatrix& x : dataset) {
    check_same_dim(center.dim(), x.dim());
    r = std::max(r, (logm(x).entries() - log_center).norm());
  }
  return r;
}

}  // namespace spdpriv
