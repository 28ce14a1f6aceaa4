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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spdpriv/errors.hpp"

namespace spdpriv {

Vector gaussian_vector(Rng& rng, const Vector& mean, double sigma) {
  if (!(sigma >= 0.0)) throw DomainError("gaussian sigma must be >= 0");
  if (mean.size() < 1) throw DimensionError("gaussian dimension must be >= 1");
  if (sigma == 0.0) return mean;
  Vector out(mean.size());
  for (Eigen::Index i = 0; i < mean.size(); ++i) {
    out(i) = mean(i) + sigma * rng.normal();
  }
  return out;
}

Matrix haar_orthogonal(Rng& rng, int k) {
  if (k < 1) throw DimensionError("haar_orthogonal needs k >= 1");
  Matrix g(k, k);
  // Column-major fill keeps the draw order independent of Eigen internals.
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i < k; ++i) g(i, j) = rng.normal();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(k, k);
  const Matrix& r = qr.matrixQR();
  for (int j = 0; j < k; ++j) {
    if (r(j, j) < 0.0) q.col(j) *= -1.0;
  }
  return q;
}

SpdMatrix sample_log_gaussian(Rng& rng, const LogGaussianParams& params) {
  if (!(params.sigma >= 0.0)) throw DomainError("log-Gaussian sigma must be >= 0");
  if (params.sigma == 0.0) return params.mean;
  const int k = params.mean.dim();
  const TangentVector noise(
      k, gaussian_vector(rng, Vector::Zero(tangent_dim(k)), params.sigma));
  return expm(logm(params.mean) + invvecd(noise));
}

double log_jacobian_from_log_spectrum(const Vector& mu) {
  const auto k = mu.size();
  double out = -mu.sum();
  for (Eigen::Index i = 0; i < k; ++i) {
    for (Eigen::Index j = i + 1; j < k; ++j) {
      const double a = std::max(mu(i), mu(j));
      const double b = std::min(mu(i), mu(j));
      const double gap = a - b;
      // |l_a - l_b| <= 1e-12 * l_a  <=>  1 - e^{-gap} <= 1e-12.
      if (-std::expm1(-gap) <= 1e-12) {
        out -= a;  // h = 1 / l_a
      } else {
        // (a - b) / (e^a - e^b) = gap / (e^a * (1 - e^{-gap}))
        out += std::log(gap) - a - std::log(-std::expm1(-gap));
      }
    }
  }
  return out;
}

double log_jacobian(const SpdMatrix& x) {
  return log_jacobian_from_log_spectrum(x.eigen().eigenvalues.array().log().matrix());
}

double log_gaussian_logdensity(const SpdMatrix& x, const LogGaussianParams& params) {
  if (!(params.sigma > 0.0)) throw DomainError("log-Gaussian density needs sigma > 0");
  const Vector variances =
      Vector::Constant(tangent_dim(params.mean.dim()), params.sigma * params.sigma);
  return log_gaussian_logdensity(x, params.mean, variances);
}

double log_gaussian_logdensity(const SpdMatrix& x, const SpdMatrix& mean,
                               const Vector& variances) {
  if (x.dim() != mean.dim()) {
    throw DimensionError("density: point and mean dimensions differ");
  }
  const int d = tangent_dim(x.dim());
  if (variances.size() != d) {
    throw DimensionError("density: expected " + std::to_string(d) + " variances");
  }
  if ((variances.array() <= 0.0).any()) {
    throw DomainError("density: variances must be positive");
  }
  const Vector diff = vecd(logm(x) - logm(mean)).coords();
  const double quad = (diff.array().square() / variances.array()).sum();
  return log_jacobian(x) - 0.5 * d * std::log(2.0 * std::numbers::pi) -
         0.5 * variances.array().log().sum() - 0.5 * quad;
}

SpdMatrix sample_synthetic_spd(Rng& rng, int k, double r) {
  if (k < 1) throw DimensionError("synthetic SPD needs k >= 1");
  if (!(r > 0.0)) throw DomainError("synthetic SPD needs r > 0");
  const double lo = std::exp(-r);
  const double hi = std::exp(r);
  Vector lambda(k);
  for (int i = 0; i < k; ++i) lambda(i) = lo + (hi - lo) * rng.uniform();
  Matrix e = haar_orthogonal(rng, k);
  return SpdMatrix::from_eigen(std::move(lambda), std::move(e));
}

}  // namespace spdpriv
