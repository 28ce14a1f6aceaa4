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

#include "spdpriv/mechanisms.hpp"

#include <cmath>
#include <sstream>

#include "spdpriv/errors.hpp"
#include "spdpriv/sampling.hpp"

namespace spdpriv {
namespace {

void require_positive_sigma(double sigma, const char* what) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw DomainError(std::string(what) + ": sigma must be positive and finite");
  }
}

// Eigenvalues of invvecd(v), i.e. the spectrum of logm X for X with log
// coordinates v.
Vector log_spectrum(int k, const Vector& v) {
  return sym_eigen(invvecd(TangentVector(k, v))).eigenvalues;
}

}  // namespace

SpdMatrix tangent_gaussian(Rng& rng, const SpdMatrix& summary, double sigma) {
  require_positive_sigma(sigma, "tangent_gaussian");
  const int k = summary.dim();
  const Vector mean = log_coordinates(summary).coords();
  return from_log_coordinates(TangentVector(k, gaussian_vector(rng, mean, sigma)));
}

SymMatrix extrinsic_gaussian(Rng& rng, const SpdMatrix& summary, double sigma) {
  require_positive_sigma(sigma, "extrinsic_gaussian");
  const int k = summary.dim();
  const Vector mean = vecd(summary.as_sym()).coords();
  return invvecd(TangentVector(k, gaussian_vector(rng, mean, sigma)));
}

LaplaceSample riemannian_laplace(Rng& rng, const SpdMatrix& summary, double sigma,
                                 const LaplaceOptions& options) {
  require_positive_sigma(sigma, "riemannian_laplace");
  if (options.burn_in < 1) throw DomainError("riemannian_laplace: burn_in must be >= 1");
  const double step = options.proposal_sigma.value_or(sigma);
  require_positive_sigma(step, "riemannian_laplace proposal");

  const int k = summary.dim();
  const Vector center = log_coordinates(summary).coords();
  const Eigen::Index d = center.size();

  Vector current = gaussian_vector(rng, center, step);
  double current_dist = (current - center).norm();
  double current_log_j = 0.0;
  if (options.ambient_jacobian_correction) {
    current_log_j = log_jacobian_from_log_spectrum(log_spectrum(k, current));
  }

  Vector candidate(d);
  long accepted = 0;
  for (int it = 0; it < options.burn_in; ++it) {
    for (Eigen::Index i = 0; i < d; ++i) candidate(i) = current(i) + step * rng.normal();
    const double candidate_dist = (candidate - center).norm();
    // Target ratio exp(-rho(m, cand)/s) / exp(-rho(m, curr)/s), clamped at 1.
    double log_alpha = (current_dist - candidate_dist) / sigma;
    double candidate_log_j = 0.0;
    if (options.ambient_jacobian_correction) {
      candidate_log_j = log_jacobian_from_log_spectrum(log_spectrum(k, candidate));
      log_alpha += current_log_j - candidate_log_j;
    }
    if (log_alpha >= 0.0 || rng.uniform() < std::exp(log_alpha)) {
      current.swap(candidate);
      current_dist = candidate_dist;
      current_log_j = candidate_log_j;
      ++accepted;
    }
  }

  const double ratio = static_cast<double>(accepted) / options.burn_in;
  std::optional<std::string> warning;
  if (ratio < 0.2 || ratio > 0.9) {
    std::ostringstream msg;
    msg << "MCMC acceptance ratio " << ratio << " outside [0.2, 0.9]";
    warning = msg.str();
  }
  return {from_log_coordinates(TangentVector(k, std::move(current))), ratio,
          std::move(warning)};
}

double privacy_loss(const SpdMatrix& y, const SpdMatrix& f_d, const SpdMatrix& f_dp,
                    double sigma) {
  require_positive_sigma(sigma, "privacy_loss");
  if (y.dim() != f_d.dim() || y.dim() != f_dp.dim()) {
    throw DimensionError("privacy_loss: dimension mismatch");
  }
  const SymMatrix log_y = logm(y);
  const double v = vecd(log_y - logm(f_d)).coords().squaredNorm();
  const double v_prime = vecd(log_y - logm(f_dp)).coords().squaredNorm();
  return (v_prime - v) / (2.0 * sigma * sigma);
}

}  // namespace spdpriv
