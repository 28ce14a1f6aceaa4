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

#include "spdpriv/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <tuple>

#include "spdpriv/descriptors.hpp"
#include "spdpriv/errors.hpp"
#include "spdpriv/image.hpp"
#include "spdpriv/sampling.hpp"

namespace spdpriv {
namespace {

constexpr std::uint64_t kDataStream = 0x64617461;   // "data"
constexpr std::uint64_t kNoiseStream = 0x6e6f6973;  // "nois"

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

// Runs body(i) for i in [0, count) on up to `threads` workers. The first
// exception thrown by any worker is rethrown on the caller's thread.
template <typename F>
void parallel_for(std::size_t count, int threads, F&& body) {
  const auto workers = static_cast<std::size_t>(
      std::clamp<long>(threads, 1, static_cast<long>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Summary {
  SpdMatrix mean;
  double radius;
};

struct Task {
  MechanismKind mechanism;
  double epsilon;
  double delta;
  int trial;
  const Summary* summary;
  int n;
  std::uint64_t group_key;
  std::string group;
};

std::vector<Task> expand_cells(const ExperimentSpec& spec,
                               const std::vector<Summary>& summaries, int n,
                               std::uint64_t group_key, const std::string& group) {
  std::vector<Task> tasks;
  for (MechanismKind mech : spec.mechanisms) {
    for (double eps : spec.epsilon_grid) {
      for (double delta : spec.delta_grid) {
        // Surface calibration errors before any work is scheduled.
        mechanism_sigma(mech, PrivacyBudget::make(eps, delta), n,
                        summaries.front().radius);
        for (int t = 0; t < spec.trials; ++t) {
          const Summary& s = summaries.size() == 1 ? summaries.front()
                                                   : summaries[static_cast<std::size_t>(t)];
          tasks.push_back({mech, eps, delta, t, &s, n, group_key, group});
        }
      }
    }
  }
  return tasks;
}

void run_tasks(const ExperimentSpec& spec, int k, const std::vector<Task>& tasks,
               std::vector<TrialRecord>& out, std::vector<std::string>* warnings) {
  std::vector<TrialRecord> records(tasks.size());
  std::vector<std::optional<std::string>> notes(tasks.size());
  parallel_for(tasks.size(), spec.threads, [&](std::size_t i) {
    const Task& task = tasks[i];
    const double sigma = mechanism_sigma(
        task.mechanism, PrivacyBudget::make(task.epsilon, task.delta), task.n,
        task.summary->radius);
    Rng rng(spec.seed,
            derive_stream({kNoiseStream, static_cast<std::uint64_t>(task.mechanism),
                           task.group_key, static_cast<std::uint64_t>(k),
                           bits(task.epsilon), bits(task.delta),
                           static_cast<std::uint64_t>(task.trial)}));
    const auto start = std::chrono::steady_clock::now();
    PrivateRelease release =
        privatize(rng, task.mechanism, task.summary->mean, sigma, spec.burn_in);
    const auto stop = std::chrono::steady_clock::now();
    const std::int64_t elapsed =
        spec.record_timing
            ? std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count()
            : 0;
    records[i] = TrialRecord{task.mechanism, k, task.epsilon, task.delta, task.trial,
                             release.utility, elapsed, release.acceptance_ratio,
                             task.group};
    notes[i] = std::move(release.warning);
  });
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (warnings && notes[i]) {
      warnings->push_back(std::string(mechanism_name(records[i].mechanism)) +
                          " k=" + std::to_string(k) + " trial " +
                          std::to_string(records[i].trial) + ": " + *notes[i]);
    }
    out.push_back(std::move(records[i]));
  }
}

Summary synthetic_summary(const ExperimentSpec& spec, int k, std::optional<int> trial) {
  Rng rng(spec.seed,
          derive_stream({kDataStream, static_cast<std::uint64_t>(k),
                         trial ? static_cast<std::uint64_t>(*trial) + 1 : 0}));
  std::vector<SpdMatrix> data;
  data.reserve(static_cast<std::size_t>(spec.n));
  for (int i = 0; i < spec.n; ++i) data.push_back(sample_synthetic_spd(rng, k, spec.r));
  const double radius = spec.measured_radius
                            ? ball_radius(data, SpdMatrix::identity(k))
                            : std::sqrt(static_cast<double>(k)) * spec.r;
  return {frechet_mean_le(data), radius};
}

bool looks_like_image(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

std::vector<std::filesystem::path> sorted_entries(const std::filesystem::path& dir,
                                                  bool directories) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (directories ? entry.is_directory() : entry.is_regular_file()) {
      out.push_back(entry.path());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view mechanism_name(MechanismKind kind) {
  switch (kind) {
    case MechanismKind::kTangentClassical:
      return "tangent_classical";
    case MechanismKind::kTangentAnalytic:
      return "tangent_analytic";
    case MechanismKind::kExtrinsicAnalytic:
      return "extrinsic_analytic";
    case MechanismKind::kRiemannianLaplace:
      return "riemannian_laplace";
  }
  return "unknown";
}

MechanismKind parse_mechanism(std::string_view name) {
  for (MechanismKind kind :
       {MechanismKind::kTangentClassical, MechanismKind::kTangentAnalytic,
        MechanismKind::kExtrinsicAnalytic, MechanismKind::kRiemannianLaplace}) {
    if (name == mechanism_name(kind)) return kind;
  }
  throw DomainError("unknown mechanism '" + std::string(name) +
                    "' (expected tangent_classical, tangent_analytic, "
                    "extrinsic_analytic or riemannian_laplace)");
}

void ExperimentSpec::validate() const {
  if (mechanisms.empty()) throw DomainError("no mechanism selected");
  if (epsilon_grid.empty()) throw DomainError("epsilon grid is empty");
  if (delta_grid.empty()) throw DomainError("delta grid is empty");
  if (trials < 1) throw DomainError("trials must be >= 1");
  if (burn_in < 1) throw DomainError("burn-in must be >= 1");
  if (threads < 1) throw DomainError("threads must be >= 1");
  for (double eps : epsilon_grid) {
    for (double delta : delta_grid) PrivacyBudget::make(eps, delta);
  }
  if (kind == ExperimentKind::kSynthetic) {
    if (k_grid.empty()) throw DomainError("k grid is empty");
    for (int k : k_grid) {
      if (k < 2 || k > kMaxDim) throw DomainError("synthetic experiments require 2 <= k <= " + std::to_string(kMaxDim));
    }
    if (n < 1) throw DomainError("dataset size n must be >= 1");
    if (!(r > 0.0)) throw DomainError("radius parameter r must be positive");
  } else {
    if (image_dir.empty()) throw DomainError("image experiments need an image directory");
    if (!(eta > 0.0)) throw DomainError("eta must be positive");
  }
}

double mechanism_sigma(MechanismKind kind, const PrivacyBudget& budget, int n,
                       double radius) {
  switch (kind) {
    case MechanismKind::kTangentClassical:
      return calibrate_classical(sensitivity_frechet_le(n, radius), budget);
    case MechanismKind::kTangentAnalytic:
      return calibrate_analytic(sensitivity_frechet_le(n, radius), budget);
    case MechanismKind::kExtrinsicAnalytic:
      return calibrate_analytic(sensitivity_extrinsic(n, radius), budget);
    case MechanismKind::kRiemannianLaplace:
      return calibrate_laplace(sensitivity_frechet_le(n, radius), budget.epsilon);
  }
  throw DomainError("unknown mechanism");
}

PrivateRelease privatize(Rng& rng, MechanismKind kind, const SpdMatrix& summary,
                         double sigma, int burn_in) {
  switch (kind) {
    case MechanismKind::kTangentClassical:
    case MechanismKind::kTangentAnalytic: {
      SpdMatrix out = tangent_gaussian(rng, summary, sigma);
      const double dist = le_distance(summary, out);
      return {out.entries(), dist * dist, std::nullopt, std::nullopt};
    }
    case MechanismKind::kExtrinsicAnalytic: {
      SymMatrix out = extrinsic_gaussian(rng, summary, sigma);
      const double err = (out.entries() - summary.entries()).squaredNorm();
      return {out.entries(), err, std::nullopt, std::nullopt};
    }
    case MechanismKind::kRiemannianLaplace: {
      LaplaceOptions options;
      options.burn_in = burn_in;
      LaplaceSample s = riemannian_laplace(rng, summary, sigma, options);
      const double dist = le_distance(summary, s.value);
      return {s.value.entries(), dist * dist, s.acceptance_ratio, std::move(s.warning)};
    }
  }
  throw DomainError("unknown mechanism");
}

std::vector<TrialRecord> run_synthetic(const ExperimentSpec& spec,
                                       std::vector<std::string>* warnings) {
  if (spec.kind != ExperimentKind::kSynthetic) {
    throw DomainError("run_synthetic needs a synthetic experiment spec");
  }
  spec.validate();
  std::vector<TrialRecord> out;
  for (int k : spec.k_grid) {
    std::vector<Summary> summaries;
    if (spec.resample_data) {
      for (int t = 0; t < spec.trials; ++t) summaries.push_back(synthetic_summary(spec, k, t));
    } else {
      summaries.push_back(synthetic_summary(spec, k, std::nullopt));
    }
    run_tasks(spec, k, expand_cells(spec, summaries, spec.n, 0, ""), out, warnings);
  }
  sort_canonical(out);
  return out;
}

std::vector<ImageClass> load_image_classes(const std::filesystem::path& dir, double eta,
                                           std::vector<std::string>* warnings) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("image directory " + dir.string() + " does not exist");
  }
  std::vector<std::pair<std::string, std::filesystem::path>> class_dirs;
  for (const auto& sub : sorted_entries(dir, /*directories=*/true)) {
    class_dirs.emplace_back(sub.filename().string(), sub);
  }
  if (class_dirs.empty()) {
    class_dirs.emplace_back(".", dir);
  } else if (warnings) {
    for (const auto& f : sorted_entries(dir, /*directories=*/false)) {
      if (looks_like_image(f)) {
        warnings->push_back(f.string() + ": ignored (outside any class directory)");
      }
    }
  }

  std::vector<ImageClass> classes;
  for (const auto& [name, path] : class_dirs) {
    ImageClass cls{name, 0, {}};
    for (const auto& file : sorted_entries(path, /*directories=*/false)) {
      try {
        const RasterImage image = read_pnm(file);
        if (cls.channels != 0 && image.channels() != cls.channels) {
          throw IoError(file.string() + ": channel count differs from the rest of class " +
                        name);
        }
        cls.channels = image.channels();
        cls.descriptors.push_back(covariance_descriptor(image, {eta}));
      } catch (const IoError& e) {
        if (warnings) warnings->push_back(std::string(e.what()) + " (skipped)");
      }
    }
    if (cls.descriptors.empty()) {
      throw DomainError("image class '" + name + "' has no readable images");
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<TrialRecord> run_image(const ExperimentSpec& spec,
                                   std::vector<std::string>* warnings) {
  if (spec.kind != ExperimentKind::kImage) {
    throw DomainError("run_image needs an image experiment spec");
  }
  spec.validate();
  std::vector<TrialRecord> out;
  for (const ImageClass& cls : load_image_classes(spec.image_dir, spec.eta, warnings)) {
    const int k = cls.descriptors.front().dim();
    const double radius =
        spec.measured_radius ? ball_radius(cls.descriptors, SpdMatrix::identity(k))
                             : descriptor_radius_bound(cls.channels, spec.eta);
    const std::vector<Summary> summaries = {{frechet_mean_le(cls.descriptors), radius}};
    const int n = static_cast<int>(cls.descriptors.size());
    run_tasks(spec, k, expand_cells(spec, summaries, n, fnv1a(cls.name), cls.name), out,
              warnings);
  }
  sort_canonical(out);
  return out;
}

void sort_canonical(std::vector<TrialRecord>& records) {
  const auto key = [](const TrialRecord& r) {
    return std::tuple<std::string_view, const std::string&, int, double, double, int>(
        mechanism_name(r.mechanism), r.group, r.k, r.epsilon, r.delta, r.trial);
  };
  std::stable_sort(records.begin(), records.end(),
                   [&](const TrialRecord& a, const TrialRecord& b) { return key(a) < key(b); });
}

}  // namespace spdpriv
