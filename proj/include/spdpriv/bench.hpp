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

// Privacy-utility experiment harness: synthetic SPD datasets and image
// covariance-descriptor corpora, privatized with every supported mechanism.

#ifndef SPDPRIV_BENCH_HPP_
#define SPDPRIV_BENCH_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spdpriv/geometry.hpp"
#include "spdpriv/mechanisms.hpp"
#include "spdpriv/rng.hpp"

namespace spdpriv {

enum class MechanismKind {
  kTangentClassical,
  kTangentAnalytic,
  kExtrinsicAnalytic,
  kRiemannianLaplace,
};

std::string_view mechanism_name(MechanismKind kind);
// Accepts the names printed by mechanism_name. Throws DomainError otherwise.
MechanismKind parse_mechanism(std::string_view name);

enum class ExperimentKind { kSynthetic, kImage };

struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::kSynthetic;
  std::vector<MechanismKind> mechanisms = {MechanismKind::kTangentAnalytic};
  std::vector<int> k_grid = {2};
  std::vector<double> epsilon_grid = {0.1};
  std::vector<double> delta_grid = {1e-6};
  int n = 500;
  double r = 0.25;
  int trials = 10;
  std::uint64_t seed = 0;
  int burn_in = 50000;
  std::filesystem::path image_dir;
  double eta = 1e-6;
  // Draw a fresh dataset for every trial instead of one per k.
  bool resample_data = false;
  // Use the measured ball radius around the identity instead of the
  // analytic bound (sqrt(k) r for synthetic data, the descriptor bound for
  // images).
  bool measured_radius = false;
  // Time each privatization call. Off keeps the CSV a pure function of the
  // spec (wall_time_ns is written as 0).
  bool record_timing = false;
  int threads = 1;

  // Throws DomainError on empty grids, trials < 1, k < 2 (synthetic), ...
  void validate() const;
};

struct TrialRecord {
  MechanismKind mechanism;
  int k;
  double epsilon;
  double delta;
  int trial;
  // Squared log-Euclidean distance for intrinsic mechanisms, squared
  // Frobenius distance for the extrinsic one.
  double utility;
  std::int64_t wall_time_ns;
  std::optional<double> acceptance_ratio;
  // Image class name; empty for synthetic runs.
  std::string group;
};

// Noise scale used by `kind` for a Frechet mean of n points within a
// log-Euclidean ball of the given radius.
double mechanism_sigma(MechanismKind kind, const PrivacyBudget& budget, int n,
                       double radius);

struct PrivateRelease {
  Matrix value;  // SPD except for the extrinsic mechanism
  double utility;
  std::optional<double> acceptance_ratio;
  std::optional<std::string> warning;
};

PrivateRelease privatize(Rng& rng, MechanismKind kind, const SpdMatrix& summary,
                         double sigma, int burn_in);

// Runs every (mechanism, k, epsilon, delta, trial) cell. Records come back
// in canonical order regardless of spec.threads. MCMC acceptance warnings
// are appended to `warnings` when given.
std::vector<TrialRecord> run_synthetic(const ExperimentSpec& spec,
                                       std::vector<std::string>* warnings = nullptr);

struct ImageClass {
  std::string name;
  int channels;
  std::vector<SpdMatrix> descriptors;
};

// One class per subdirectory of `dir`, or a single class "." when `dir`
// holds image files directly. Unparseable files are skipped with a warning;
// a class left without images is an error.
std::vector<ImageClass> load_image_classes(const std::filesystem::path& dir, double eta,
                                           std::vector<std::string>* warnings = nullptr);

std::vector<TrialRecord> run_image(const ExperimentSpec& spec,
                                   std::vector<std::string>* warnings = nullptr);

// Sorts by (mechanism name, group, k, epsilon, delta, trial).
void sort_canonical(std::vector<TrialRecord>& records);

}  // namespace spdpriv

#endif  // SPDPRIV_BENCH_HPP_
