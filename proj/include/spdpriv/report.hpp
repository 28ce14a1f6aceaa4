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

#ifndef SPDPRIV_REPORT_HPP_
#define SPDPRIV_REPORT_HPP_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spdpriv/bench.hpp"

namespace spdpriv {

inline constexpr std::string_view kCsvHeader =
    "mechanism,k,epsilon,delta,trial,utility,wall_time_ns,acceptance_ratio";

// Header line plus one row per record, '\n' line endings. acceptance_ratio
// is empty for mechanisms without an MCMC chain.
std::string format_csv(std::span<const TrialRecord> records);

enum class PlotAxis { kDimension, kEpsilon };

struct SeriesPoint {
  double x;
  double mean;
  double stddev;  // sample standard deviation, 0 for a single record
  int count;
};

struct PlotSeries {
  std::string label;
  std::vector<SeriesPoint> points;  // ascending x
};

// x axis is k when the records span several k values, epsilon otherwise.
PlotAxis choose_axis(std::span<const TrialRecord> records);

// Groups records into one series per mechanism (split further by delta and
// image class when those vary) and aggregates each x position.
std::vector<PlotSeries> summarize(std::span<const TrialRecord> records, PlotAxis axis);

// SVG line chart of mean utility with a (mean - 2 sd, mean + 2 sd) band per
// series on a log10 y axis.
std::string render_svg(std::span<const TrialRecord> records);

// Both throw DomainError on empty input and IoError if the file cannot be
// written.
void emit_csv(std::span<const TrialRecord> records, const std::filesystem::path& path);
void emit_plot(std::span<const TrialRecord> records, const std::filesystem::path& path);

}  // namespace spdpriv

#endif  // SPDPRIV_REPORT_HPP_
