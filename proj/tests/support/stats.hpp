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

#ifndef SPDPRIV_TESTS_SUPPORT_STATS_HPP_
#define SPDPRIV_TESTS_SUPPORT_STATS_HPP_

#include <functional>
#include <span>
#include <vector>

namespace spdpriv::testing {

struct TestResult {
  double statistic;
  double p_value;
};

double normal_cdf(double x);

// Asymptotic Kolmogorov survival function Q(lambda).
double kolmogorov_survival(double lambda);

// One-sample Kolmogorov-Smirnov test against a continuous CDF, p-value from
// the asymptotic law with Stephens' small-sample correction.
TestResult ks_test(std::vector<double> samples, const std::function<double(double)>& cdf);

TestResult ks_two_sample(std::vector<double> a, std::vector<double> b);

// Pearson goodness of fit with `bins` equiprobable cells defined by the
// reference quantile function.
TestResult chi_square_gof(std::span<const double> samples,
                          const std::function<double(double)>& quantile, int bins);

double mean(std::span<const double> xs);
double sample_variance(std::span<const double> xs);

}  // namespace spdpriv::testing

#endif  // SPDPRIV_TESTS_SUPPORT_STATS_HPP_
