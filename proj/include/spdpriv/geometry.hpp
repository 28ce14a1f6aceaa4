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

// Log-Euclidean geometry of the manifold of symmetric positive definite
// matrices.
//
// The matrix logarithm is a global chart SPD(k) -> SYM(k), and vecd is an
// isometry SYM(k) -> R^{k(k+1)/2} for the Frobenius inner product. Every
// operation below is a closed-form composition of those two maps, so all of
// them are pure functions of their arguments.

#ifndef SPDPRIV_GEOMETRY_HPP_
#define SPDPRIV_GEOMETRY_HPP_

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace spdpriv {

#ifndef SPDPRIV_MAX_DIM
#define SPDPRIV_MAX_DIM 256
#endif

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Largest k accepted when constructing a SymMatrix / SpdMatrix.
inline constexpr int kMaxDim = SPDPRIV_MAX_DIM;

// Inputs whose largest |A - A^T| entry exceeds this (relative to
// max(1, max|A|)) are rejected rather than symmetrized.
inline constexpr double kSymmetryTolerance = 1e-9;

// Positive-definiteness admission rule: lambda_min > kSpdTolerance *
// max(1, lambda_max).
inline constexpr double kSpdTolerance = 1e-12;

// Number of vecd coordinates for k x k symmetric matrices.
constexpr int tangent_dim(int k) { return k * (k + 1) / 2; }

struct EigenDecomposition {
  Vector eigenvalues;  // ascending
  Matrix basis;        // orthogonal, columns are eigenvectors
};

// A k x k real symmetric matrix (the tangent space SYM(k)).
class SymMatrix {
 public:
  // Symmetrizes `m` as (m + m^T) / 2. Throws DimensionError for non-square
  // or oversized input and DomainError when the asymmetry is above
  // kSymmetryTolerance or an entry is not finite.
  static SymMatrix from(const Matrix& m);
  static SymMatrix zero(int k);
  static SymMatrix identity(int k);
  static SymMatrix diagonal(std::span<const double> diag);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  double frobenius_norm() const { return m_.norm(); }

  SymMatrix& operator+=(const SymMatrix& other);
  SymMatrix& operator-=(const SymMatrix& other);
  SymMatrix& operator*=(double a);

  friend SymMatrix operator+(SymMatrix a, const SymMatrix& b) { return a += b; }
  friend SymMatrix operator-(SymMatrix a, const SymMatrix& b) { return a -= b; }
  friend SymMatrix operator*(double a, SymMatrix s) { return s *= a; }

 private:
  explicit SymMatrix(Matrix m) : m_(std::move(m)) {}
  friend class SpdMatrix;
  Matrix m_;
};

// A k x k symmetric positive definite matrix. The eigendecomposition is
// computed once at construction and kept alongside the entries; logm and
// the admission check both reuse it.
class SpdMatrix {
 public:
  // Throws DomainError "not positive definite" when the smallest eigenvalue
  // fails the kSpdTolerance admission rule.
  static SpdMatrix from(const Matrix& m);
  static SpdMatrix from(const SymMatrix& s);
  // Assembles basis * diag(eigenvalues) * basis^T. Eigenvalues must be
  // strictly positive and the basis orthogonal to 1e-10; the pair is sorted
  // into ascending order.
  static SpdMatrix from_eigen(Vector eigenvalues, Matrix basis);
  static SpdMatrix identity(int k);
  static SpdMatrix diagonal(std::span<const double> diag);

  int dim() const { return static_cast<int>(m_.rows()); }
  const Matrix& entries() const { return m_; }
  double operator()(int i, int j) const { return m_(i, j); }
  const EigenDecomposition& eigen() const { return eig_; }
  SymMatrix as_sym() const { return SymMatrix(m_); }

 private:
  SpdMatrix(Matrix m, EigenDecomposition eig)
      : m_(std::move(m)), eig_(std::move(eig)) {}
  Matrix m_;
  EigenDecomposition eig_;
};

// Vectorized tangent coordinates: length k(k+1)/2.
class TangentVector {
 public:
  // Throws DimensionError if coords.size() != tangent_dim(k).
  TangentVector(int k, Vector coords);
  static TangentVector zero(int k) { return {k, Vector::Zero(tangent_dim(k))}; }

  int ambient_dim() const { return k_; }
  int size() const { return static_cast<int>(coords_.size()); }
  const Vector& coords() const { return coords_; }
  Vector& coords() { return coords_; }

 private:
  int k_;
  Vector coords_;
};

// Symmetric eigensolver (tridiagonalization + implicit QL). Eigenvalues in
// ascending order. Throws NumericalError on non-convergence.
EigenDecomposition sym_eigen(const SymMatrix& s);

SymMatrix logm(const SpdMatrix& x);
SpdMatrix expm(const SymMatrix& s);

// [diag(S), sqrt(2) * strict upper triangle of S] with the upper triangle
// read row-major: (0,1), (0,2), ..., (0,k-1), (1,2), ...
TangentVector vecd(const SymMatrix& s);
SymMatrix invvecd(const TangentVector& v);

// vecd(logm x), computed without materializing the intermediate SymMatrix
// twice.
TangentVector log_coordinates(const SpdMatrix& x);
SpdMatrix from_log_coordinates(const TangentVector& v);

// ||logm x1 - logm x2||_F.
double le_distance(const SpdMatrix& x1, const SpdMatrix& x2);

// Vector-space structure on SPD(k) induced by the log chart.
SpdMatrix le_add(const SpdMatrix& x1, const SpdMatrix& x2);
SpdMatrix le_sub(const SpdMatrix& x1, const SpdMatrix& x2);
SpdMatrix le_scale(double a, const SpdMatrix& x);

// expm of the arithmetic mean of logm. Throws DomainError on empty input
// and DimensionError on mixed dimensions.
SpdMatrix frechet_mean_le(std::span<const SpdMatrix> dataset);

// max_i le_distance(center, dataset[i]).
double ball_radius(std::span<const SpdMatrix> dataset, const SpdMatrix& center);

}  // namespace spdpriv

#endif  // SPDPRIV_GEOMETRY_HPP_
