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

#include <cmath>
#include <numbers>
#include <sstream>

#include "spdpriv/errors.hpp"
#include "spdpriv/mechanisms.hpp"

namespace spdpriv {
namespace {

constexpr double kBracketLow = 1e-6;
constexpr double kBracketHigh = 1e6;

// The condition subtracts two terms that can be far larger than delta, so
// it is evaluated in extended precision.
using Wide = long double;

Wide normal_cdf(Wide x) { return 0.5L * std::erfc(-x / std::sqrt(2.0L)); }

// ln Phi(x), accurate in the far left tail where erfc underflows.
Wide log_normal_cdf(Wide x) {
  if (x > -100.0L) return std::log(normal_cdf(x));
  // Asymptotic Mills-ratio expansion; relative error < 1e-8 for x <= -100.
  const Wide x2 = x * x;
  return -0.5L * x2 - std::log(-x) - 0.5L * std::log(2.0L * std::numbers::pi_v<Wide>) +
         std::log1p(-1.0L / x2 + 3.0L / (x2 * x2));
}

void require_positive_sensitivity(const Sensitivity& s) {
  if (!(s.value > 0.0) || !std::isfinite(s.value)) {
    throw DomainError("sensitivity must be positive and finite");
  }
}

}  // namespace

PrivacyBudget PrivacyBudget::make(double epsilon, double delta) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw DomainError("epsilon must be positive");
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  return {epsilon, delta};
}

void MechanismConfig::validate() const {
  PrivacyBudget::make(budget.epsilon, budget.delta);
  if (!(sensitivity.value >= 0.0)) throw DomainError("sensitivity must be >= 0");
  if (calibration == Calibration::kClassical && budget.epsilon >= 1.0) {
    throw DomainError(
        "classical calibration requires epsilon < 1; use analytic calibration");
  }
  if (mcmc_burn_in < 1) throw DomainError("MCMC burn-in must be >= 1");
}

Sensitivity sensitivity_frechet_le(int n, double r) {
  if (n < 1) throw DomainError("dataset size must be >= 1");
  if (!(r > 0.0)) throw DomainError("ball radius must be positive");
  return {2.0 * r / n, SensitivityKind::kLogEuclidean};
}

Sensitivity sensitivity_extrinsic(int n, double r) {
  if (n < 1) throw DomainError("dataset size must be >= 1");
  if (!(r > 0.0)) throw DomainError("ball radius must be positive");
  return {2.0 * std::expm1(r) / n, SensitivityKind::kExtrinsic};
}

double calibrate_classical(const Sensitivity& sensitivity, const PrivacyBudget& budget) {
  require_positive_sensitivity(sensitivity);
  PrivacyBudget::make(budget.epsilon, budget.delta);
  if (budget.epsilon >= 1.0) {
    std::ostringstream msg;
    msg << "classical calibration requires epsilon < 1 (got " << budget.epsilon
        << "); use analytic calibration instead";
    throw DomainError(msg.str());
  }
  return sensitivity.value * std::sqrt(2.0 * std::log(1.25 / budget.delta)) /
         budget.epsilon;
}

double analytic_delta(double sensitivity, double epsilon, double sigma) {
  const Wide a = static_cast<Wide>(sensitivity) / (2.0L * sigma);
  const Wide b = static_cast<Wide>(epsilon) * sigma / sensitivity;
  const Wide first = normal_cdf(a - b);
  const Wide second = std::exp(epsilon + log_normal_cdf(-a - b));
  return static_cast<double>(first - second);
}

double calibrate_analytic(const Sensitivity& sensitivity, const PrivacyBudget& budget) {
  require_positive_sensitivity(sensitivity);
  if (!(budget.epsilon >= 0.0) || !std::isfinite(budget.epsilon)) {
    throw DomainError("epsilon must be >= 0");
  }
  if (!(budget.delta > 0.0 && budget.delta < 1.0)) {
    throw DomainError("delta must lie in (0, 1)");
  }
  const double d = sensitivity.value;
  const double eps = budget.epsilon;
  double lo = kBracketLow * d;
  double hi = kBracketHigh * d;
  const double delta_lo = analytic_delta(d, eps, lo);
  const double delta_hi = analytic_delta(d, eps, hi);
  if (!(delta_hi <= budget.delta) || !(delta_lo > budget.delta)) {
    std::ostringstream msg;
    msg << "analytic calibration bracket [" << lo << ", " << hi
        << "] does not contain the root (delta(lo) = " << delta_lo
        << ", delta(hi) = " << delta_hi << ", target " << budget.delta << ")";
    throw NumericalError(msg.str());
  }
  // Run past the 1e-12 relative width until the bracket cannot shrink, so
  // printed values are stable to the last reported digit.
  while (true) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (analytic_delta(d, eps, mid) <= budget.delta) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double calibrate(const MechanismConfig& config) {
  config.validate();
  return config.calibration == Calibration::kClassical
             ? calibrate_classical(config.sensitivity, config.budget)
             : calibrate_analytic(config.sensitivity, config.budget);
}

double calibrate_laplace(const Sensitivity& sensitivity, double epsilon) {
  require_positive_sensitivity(sensitivity);
  if (!(epsilon > 0.0)) throw DomainError("epsilon must be positive");
  return 2.0 * sensitivity.value / epsilon;
}

}  // namespace spdpriv
