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

#ifndef SPDPRIV_SAMPLING_HPP_
#define SPDPRIV_SAMPLING_HPP_

#include "spdpriv/geometry.hpp"
#include "spdpriv/rng.hpp"

namespace spdpriv {

// i.i.d. N(mean_i, sigma^2) entries. sigma == 0 returns `mean` unchanged.
Vector gaussian_vector(Rng& rng, const Vector& mean, double sigma);

// Haar-distributed k x k orthogonal matrix: QR of a standard Gaussian matrix
// with the columns of Q re-signed so that diag(R) > 0.
Matrix haar_orthogonal(Rng& rng, int k);

// Log-Gaussian LN(mean, sigma^2 I) on SPD(k): vecd(logm X) is Gaussian with
// mean vecd(logm mean) and isotropic covariance sigma^2 I.
struct LogGaussianParams {
  SpdMatrix mean;
  double sigma;
};

// mean (+) expm(invvecd(z)), z ~ N(0, sigma^2 I). sigma == 0 returns the
// mean itself.
SpdMatrix sample_log_gaussian(Rng& rng, const LogGaussianParams& params);

// ln J(X) for the change of variables X -> vecd(logm X), where the density
// is taken with respect to Lebesgue measure on vecd(X):
//   J(X) = det(X)^{-1} * prod_{i<j} h(l_i, l_j),
//   h(a, b) = (ln a - ln b) / (a - b) for a > b, 1/a when a == b.
// The pair is ordered so the first argument is the larger eigenvalue, and
// "equal" means |a - b| <= 1e-12 * max(a, b).
double log_jacobian(const SpdMatrix& x);

// Same quantity from the spectrum of logm X (mu_i = ln l_i), evaluated with
// expm1 so that nearly equal eigenvalues stay accurate.
double log_jacobian_from_log_spectrum(const Vector& mu);

// Natural log of the LN(mean, sigma^2 I) density at x.
double log_gaussian_logdensity(const SpdMatrix& x, const LogGaussianParams& params);

// Diagnostic extension: diagonal tangent covariance diag(variances) in vecd
// coordinates. Not used by any mechanism.
double log_gaussian_logdensity(const SpdMatrix& x, const SpdMatrix& mean,
                               const Vector& variances);

// E * diag(l) * E^T with l_i ~ U[e^{-r}, e^{r}] and E Haar orthogonal.
// Always satisfies ||logm X||_F <= sqrt(k) * r.
SpdMatrix sample_synthetic_spd(Rng& rng, int k, double r);

}  // namespace spdpriv

#endif  // SPDPRIV_SAMPLING_HPP_
