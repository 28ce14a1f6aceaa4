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

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spdpriv/bench.hpp"
#include "spdpriv/config.hpp"
#include "spdpriv/descriptors.hpp"
#include "spdpriv/errors.hpp"
#include "spdpriv/image.hpp"
#include "spdpriv/matrix_io.hpp"
#include "spdpriv/mechanisms.hpp"
#include "spdpriv/report.hpp"

namespace {

using namespace spdpriv;

// Bench flags are kept as raw strings so they can be layered over a config
// file through the same apply_setting path.
struct BenchFlags {
  std::string config;
  std::vector<std::pair<std::string, std::string>> overrides;
  std::string out_csv;
  std::string out_plot;
};

void add_bench_flags(CLI::App* cmd, BenchFlags& flags, bool image) {
  cmd->add_option("--config", flags.config, "key = value settings file");
  cmd->add_option("--out-csv", flags.out_csv, "CSV output path (default: stdout)");
  cmd->add_option("--out-plot", flags.out_plot, "SVG plot output path");
  const auto value_flag = [&](const std::string& key, const std::string& help) {
    cmd->add_option_function<std::string>(
        "--" + key, [&flags, key](const std::string& v) { flags.overrides.emplace_back(key, v); },
        help);
  };
  const auto switch_flag = [&](const std::string& key, const std::string& help) {
    cmd->add_flag_function(
        "--" + key,
        [&flags, key](std::int64_t) { flags.overrides.emplace_back(key, "true"); }, help);
  };
  value_flag("seed", "64-bit seed");
  value_flag("trials", "trials per cell");
  value_flag("eps", "comma-separated epsilon grid");
  value_flag("delta", "comma-separated delta grid");
  value_flag("mechanism",
             "comma-separated list of tangent_classical, tangent_analytic, "
             "extrinsic_analytic, riemannian_laplace");
  value_flag("burn-in", "Metropolis burn-in steps");
  value_flag("threads", "worker threads");
  switch_flag("timing", "record per-call wall time");
  switch_flag("measured-radius", "use the measured data radius for sensitivity");
  if (image) {
    value_flag("images", "image directory (one subdirectory per class)");
    value_flag("eta", "descriptor regularization");
  } else {
    value_flag("k", "comma-separated matrix dimensions");
    value_flag("n", "dataset size");
    value_flag("r", "eigenvalue log-range");
    switch_flag("resample-data", "draw a new dataset for every trial");
  }
}

int run_bench(const BenchFlags& flags, ExperimentKind kind) {
  ExperimentSpec spec;
  spec.kind = kind;
  if (!flags.config.empty()) {
    for (const auto& [key, value] : read_config(flags.config)) apply_setting(spec, key, value);
  }
  for (const auto& [key, value] : flags.overrides) apply_setting(spec, key, value);
  spec.validate();

  std::vector<std::string> warnings;
  std::vector<TrialRecord> records = kind == ExperimentKind::kSynthetic
                                         ? run_synthetic(spec, &warnings)
                                         : run_image(spec, &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
  if (flags.out_csv.empty()) {
    std::cout << format_csv(records);
  } else {
    emit_csv(records, flags.out_csv);
  }
  if (!flags.out_plot.empty()) emit_plot(records, flags.out_plot);
  return 0;
}

double sigma_from_sensitivity(MechanismKind kind, double value, const PrivacyBudget& budget) {
  switch (kind) {
    case MechanismKind::kTangentClassical:
      return calibrate_classical({value, SensitivityKind::kLogEuclidean}, budget);
    case MechanismKind::kTangentAnalytic:
      return calibrate_analytic({value, SensitivityKind::kLogEuclidean}, budget);
    case MechanismKind::kExtrinsicAnalytic:
      return calibrate_analytic({value, SensitivityKind::kExtrinsic}, budget);
    case MechanismKind::kRiemannianLaplace:
      return calibrate_laplace({value, SensitivityKind::kLogEuclidean}, budget.epsilon);
  }
  throw DomainError("unknown mechanism");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private Frechet means on SPD matrices"};
  app.require_subcommand(1);

  // calibrate
  double cal_sensitivity = 1.0;
  double cal_eps = 0.1;
  double cal_delta = 1e-6;
  std::string cal_flavor = "analytic";
  auto* cal = app.add_subcommand("calibrate", "print the Gaussian (or Laplace) noise scale");
  cal->add_option("--sensitivity", cal_sensitivity, "sensitivity")->required();
  cal->add_option("--eps", cal_eps, "epsilon");
  cal->add_option("--delta", cal_delta, "delta");
  cal->add_option("--flavor", cal_flavor, "classical, analytic or laplace")
      ->check(CLI::IsMember({"classical", "analytic", "laplace"}));

  // privatize
  std::string priv_input;
  std::string priv_mechanism = "tangent_analytic";
  double priv_eps = 0.1;
  double priv_delta = 1e-6;
  int priv_n = 500;
  double priv_r = 0.25;
  std::optional<double> priv_sensitivity;
  std::uint64_t priv_seed = 0;
  int priv_burn_in = 50000;
  auto* priv = app.add_subcommand("privatize", "release one matrix read from a file");
  priv->add_option("matrix", priv_input, "matrix file")->required();
  priv->add_option("--mechanism", priv_mechanism, "mechanism name");
  priv->add_option("--eps", priv_eps, "epsilon");
  priv->add_option("--delta", priv_delta, "delta");
  priv->add_option("--n", priv_n, "dataset size behind the summary");
  priv->add_option("--r", priv_r, "data radius around the identity");
  priv->add_option("--sensitivity", priv_sensitivity, "explicit sensitivity (overrides n, r)");
  priv->add_option("--seed", priv_seed, "64-bit seed");
  priv->add_option("--burn-in", priv_burn_in, "Metropolis burn-in steps");

  // benches
  BenchFlags synth_flags;
  auto* synth = app.add_subcommand("synthetic-bench", "privacy-utility sweep on synthetic data");
  add_bench_flags(synth, synth_flags, false);
  BenchFlags image_flags;
  auto* image = app.add_subcommand("image-bench", "privacy-utility sweep on image descriptors");
  add_bench_flags(image, image_flags, true);

  // descriptor
  std::string desc_input;
  double desc_eta = 1e-6;
  bool desc_csv = false;
  auto* desc = app.add_subcommand("descriptor", "print the covariance descriptor of an image");
  desc->add_option("image", desc_input, "PGM or PPM file")->required();
  desc->add_option("--eta", desc_eta, "regularization");
  desc->add_flag("--csv", desc_csv, "comma-separated output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cal) {
      const PrivacyBudget budget = PrivacyBudget::make(cal_eps, cal_delta);
      const Sensitivity s{cal_sensitivity, SensitivityKind::kLogEuclidean};
      double sigma = 0.0;
      if (cal_flavor == "classical") {
        sigma = calibrate_classical(s, budget);
      } else if (cal_flavor == "analytic") {
        sigma = calibrate_analytic(s, budget);
      } else {
        sigma = calibrate_laplace(s, budget.epsilon);
      }
      std::cout << std::setprecision(12) << sigma << '\n';
    } else if (*priv) {
      const MechanismKind kind = parse_mechanism(priv_mechanism);
      const PrivacyBudget budget = PrivacyBudget::make(priv_eps, priv_delta);
      const SpdMatrix summary = SpdMatrix::from(read_matrix(priv_input));
      const double sigma = priv_sensitivity
                               ? sigma_from_sensitivity(kind, *priv_sensitivity, budget)
                               : mechanism_sigma(kind, budget, priv_n, priv_r);
      Rng rng(priv_seed);
      PrivateRelease release = privatize(rng, kind, summary, sigma, priv_burn_in);
      if (release.warning) std::cerr << "warning: " << *release.warning << '\n';
      write_matrix(std::cout, release.value);
    } else if (*synth) {
      return run_bench(synth_flags, ExperimentKind::kSynthetic);
    } else if (*image) {
      return run_bench(image_flags, ExperimentKind::kImage);
    } else if (*desc) {
      const RasterImage img = read_pnm(desc_input);
      const SpdMatrix d = covariance_descriptor(img, DescriptorParams{desc_eta});
      write_matrix(std::cout, d.entries(), desc_csv ? ',' : ' ');
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
