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

#include "spdpriv/report.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "spdpriv/errors.hpp"
#include "spdpriv/matrix_io.hpp"

namespace spdpriv {
namespace {

constexpr double kWidth = 760;
constexpr double kHeight = 480;
constexpr double kLeft = 80;
constexpr double kRight = 200;
constexpr double kTop = 30;
constexpr double kBottom = 60;

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

void require_records(std::span<const TrialRecord> records) {
  if (records.empty()) throw DomainError("no records to emit");
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << contents;
  if (!out) throw IoError("failed writing " + path.string());
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_csv(std::span<const TrialRecord> records) {
  std::string out(kCsvHeader);
  out += '\n';
  for (const TrialRecord& r : records) {
    out += mechanism_name(r.mechanism);
    out += ',' + std::to_string(r.k);
    out += ',' + format_double(r.epsilon);
    out += ',' + format_double(r.delta);
    out += ',' + std::to_string(r.trial);
    out += ',' + format_double(r.utility);
    out += ',' + std::to_string(r.wall_time_ns);
    out += ',';
    if (r.acceptance_ratio) out += format_double(*r.acceptance_ratio);
    out += '\n';
  }
  return out;
}

void emit_csv(std::span<const TrialRecord> records, const std::filesystem::path& path) {
  require_records(records);
  write_file(path, format_csv(records));
}

PlotAxis choose_axis(std::span<const TrialRecord> records) {
  std::set<int> ks;
  for (const auto& r : records) ks.insert(r.k);
  return ks.size() > 1 ? PlotAxis::kDimension : PlotAxis::kEpsilon;
}

std::vector<PlotSeries> summarize(std::span<const TrialRecord> records, PlotAxis axis) {
  std::set<double> deltas;
  std::set<std::string> groups;
  for (const auto& r : records) {
    deltas.insert(r.delta);
    groups.insert(r.group);
  }
  std::map<std::string, std::map<double, std::vector<double>>> buckets;
  for (const auto& r : records) {
    std::string label(mechanism_name(r.mechanism));
    if (deltas.size() > 1) label += " delta=" + format_double(r.delta);
    if (groups.size() > 1) label += " [" + r.group + "]";
    if (axis == PlotAxis::kDimension) label += " eps=" + format_double(r.epsilon);
    const double x = axis == PlotAxis::kDimension ? r.k : r.epsilon;
    buckets[label][x].push_back(r.utility);
  }
  std::vector<PlotSeries> out;
  for (auto& [label, by_x] : buckets) {
    PlotSeries series{label, {}};
    for (auto& [x, values] : by_x) {
      const double n = static_cast<double>(values.size());
      double mean = 0.0;
      for (double v : values) mean += v;
      mean /= n;
      double ss = 0.0;
      for (double v : values) ss += (v - mean) * (v - mean);
      const double sd = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
      series.points.push_back({x, mean, sd, static_cast<int>(values.size())});
    }
    out.push_back(std::move(series));
  }
  return out;
}

std::string render_svg(std::span<const TrialRecord> records) {
  require_records(records);
  const PlotAxis axis = choose_axis(records);
  const std::vector<PlotSeries> series = summarize(records, axis);

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -x_min;
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = 0.0;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      if (p.mean > 0.0) y_min = std::min(y_min, p.mean);
      y_max = std::max(y_max, p.mean + 2.0 * p.stddev);
      if (p.mean - 2.0 * p.stddev > 0.0) y_min = std::min(y_min, p.mean - 2.0 * p.stddev);
    }
  }
  if (!std::isfinite(y_min)) y_min = 1e-12;
  if (!(y_max > y_min)) y_max = y_min * 10.0;
  const double lo_dec = std::floor(std::log10(y_min));
  const double hi_dec = std::max(std::ceil(std::log10(y_max)), lo_dec + 1.0);
  if (!(x_max > x_min)) {
    x_min -= 0.5;
    x_max += 0.5;
  }

  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  const auto px = [&](double x) { return kLeft + (x - x_min) / (x_max - x_min) * plot_w; };
  const auto py = [&](double y) {
    const double ly = std::log10(std::max(y, std::pow(10.0, lo_dec)));
    return kTop + (hi_dec - ly) / (hi_dec - lo_dec) * plot_h;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
      << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";

  for (double dec = lo_dec; dec <= hi_dec; dec += 1.0) {
    const double y = py(std::pow(10.0, dec));
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + plot_w
        << "\" y2=\"" << y << "\" stroke=\"#dddddd\"/>\n";
    svg << "<text x=\"" << kLeft - 6 << "\" y=\"" << y + 4
        << "\" text-anchor=\"end\">1e" << static_cast<int>(dec) << "</text>\n";
  }
  std::set<double> xs;
  for (const auto& s : series) {
    for (const auto& p : s.points) xs.insert(p.x);
  }
  for (double x : xs) {
    svg << "<text x=\"" << px(x) << "\" y=\"" << kTop + plot_h + 18
        << "\" text-anchor=\"middle\">" << format_double(x) << "</text>\n";
  }
  svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" text-anchor=\"middle\">" << (axis == PlotAxis::kDimension ? "k" : "epsilon")
      << "</text>\n";
  svg << "<text transform=\"translate(18," << kTop + plot_h / 2
      << ") rotate(-90)\" text-anchor=\"middle\">utility (log scale)</text>\n";

  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    svg << "<g class=\"series\" data-label=\"" << xml_escape(s.label) << "\">\n";
    svg << "<polygon class=\"band\" fill=\"" << color
        << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
    for (const auto& p : s.points) svg << px(p.x) << ',' << py(p.mean + 2.0 * p.stddev) << ' ';
    for (auto it = s.points.rbegin(); it != s.points.rend(); ++it) {
      svg << px(it->x) << ',' << py(it->mean - 2.0 * it->stddev) << ' ';
    }
    svg << "\"/>\n";
    svg << "<polyline class=\"mean\" fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"2\" points=\"";
    for (const auto& p : s.points) svg << px(p.x) << ',' << py(p.mean) << ' ';
    svg << "\"/>\n";
    for (const auto& p : s.points) {
      svg << "<circle cx=\"" << px(p.x) << "\" cy=\"" << py(p.mean) << "\" r=\"3\" fill=\""
          << color << "\" data-mean=\"" << format_double(p.mean) << "\" data-halfwidth=\""
          << format_double(2.0 * p.stddev) << "\"/>\n";
    }
    const double ly = kTop + 14 + 18 * static_cast<double>(i);
    svg << "<line x1=\"" << kLeft + plot_w + 12 << "\" y1=\"" << ly - 4 << "\" x2=\""
        << kLeft + plot_w + 32 << "\" y2=\"" << ly - 4 << "\" stroke=\"" << color
        << "\" stroke-width=\"2\"/>\n";
    svg << "<text x=\"" << kLeft + plot_w + 36 << "\" y=\"" << ly << "\">"
        << xml_escape(s.label) << "</text>\n";
    svg << "</g>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

void emit_plot(std::span<const TrialRecord> records, const std::filesystem::path& path) {
  write_file(path, render_svg(records));
}

}  // namespace spdpriv
