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

// Sensitivities, noise calibration and the three privatization mechanisms for
// SPD-valued summaries under the log-Euclidean metric.

#ifndef SPDPRIV_MECHANISMS_HPP_
#define SPDPRIV_MECHANISMS_HPP_

#include <optional>
#include <string>

#include "spdpriv/geometry.hpp"
#include "spdpriv/rng.hpp"

namespace spdpriv {

struct PrivacyBudget {
  double epsilon;
  double delta;

  // Throws DomainError unless epsilon > 0 and 0 < delta < 1.
  static PrivacyBudget make(double epsilon, double delta);
};

enum class SensitivityKind { kLogEuclidean, kExtrinsic };

struct Sensitivity {
  double value;
  SensitivityKind kind;
};

enum class Calibration { kClassical, kAnalytic };

struct MechanismConfig {
  PrivacyBudget budget;
  Sensitivity sensitivity;
  Calibration calibration = Calibration::kAnalytic;
  int mcmc_burn_in = 50000;

  // Classical calibration additionally requires epsilon < 1.
  void validate() const;
};

// Log-Euclidean Frechet mean of n points in a geodesic ball of radius r:
// Delta_LE <= 2r / n.
Sensitivity sensitivity_frechet_le(int n, double r);

// Extrinsic (Frobenius) sensitivity of the same mean: 2 (e^r - 1) / n.
Sensitivity sensitivity_extrinsic(int n, double r);

// Delta * sqrt(2 ln(1.25 / delta)) / epsilon. Requires 0 < epsilon < 1.
double calibrate_classical(const Sensitivity& sensitivity, const PrivacyBudget& budget);

// delta(sigma) = Phi(D/2s - e*s/D) - e^e * Phi(-D/2s - e*s/D), the exact
// (epsilon, delta) curve of a Gaussian mechanism with L2 sensitivity D.
double analytic_delta(double sensitivity, double epsilon, double sigma);

// Smallest sigma with analytic_delta(sigma) <= delta, by bisection on
// [1e-6 D, 1e6 D] down to relative width 1e-12. The returned value is the
// upper end of the final bracket, so it always satisfies the condition.
double calibrate_analytic(const Sensitivity& sensitivity, const PrivacyBudget& budget);

// Dispatches on config.calibration after validating the config.
double calibrate(const MechanismConfig& config);

// Scale of the Riemannian Laplace baseline for pure epsilon-DP: 2 Delta / eps.
double calibrate_laplace(const Sensitivity& sensitivity, double epsilon);

// expm(invvecd(N(vecd(logm summary), sigma^2 I))).
SpdMatrix tangent_gaussian(Rng& rng, const SpdMatrix& summary, double sigma);

// invvecd(N(vecd(summary), sigma^2 I)): Gaussian noise in the ambient space
// of symmetric matrices. The result is symmetric but need not be SPD.
SymMatrix extrinsic_gaussian(Rng& rng, const SpdMatrix& summary, double sigma);

struct LaplaceOptions {
  int burn_in = 50000;
  // Proposal step scale; defaults to the target's sigma.
  std::optional<double> proposal_sigma;
  // Adds the ln J(current) - ln J(candidate) Hastings term, which targets
  // exp(-rho/sigma) against Lebesgue measure on vecd(X) instead of the
  // log-Euclidean volume. Off by default.
  bool ambient_jacobian_correction = false;
};

struct LaplaceSample {
  SpdMatrix value;
  double acceptance_ratio;
  // Set when acceptance_ratio falls outside [0.2, 0.9].
  std::optional<std::string> warning;
};

// Random-walk Metropolis chain targeting p(X) ~ exp(-rho_LE(summary, X) /
// sigma) with log-Gaussian proposals LN(X_curr, proposal_sigma^2 I). Starts at
// a draw of LN(summary, proposal_sigma^2 I), runs burn_in steps and returns
// the final state. The chain is simulated in vecd(logm .) coordinates, where
// the log-Gaussian proposal is an ordinary Gaussian random walk.
LaplaceSample riemannian_laplace(Rng& rng, const SpdMatrix& summary, double sigma,
                                 const LaplaceOptions& options = {});

// Privacy loss ln(p_{A(D)}(y) / p_{A(D')}(y)) of the tangent Gaussian
// mechanism with f(D) = f_d, f(D') = f_dp; the Jacobian factors cancel.
double privacy_loss(const SpdMatrix& y, const SpdMatrix& f_d, const SpdMatrix& f_dp,
                    double sigma);

}  // namespace spdpriv

#endif  // SPDPRIV_MECHANISMS_HPP_
