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

#include "spdpriv/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "spdpriv/errors.hpp"

namespace spdpriv {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_number(std::string_view text) {
  text = trim(text);
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw DomainError("invalid number '" + std::string(text) + "'");
  }
  return value;
}

std::vector<std::string_view> split_list(std::string_view text) {
  std::vector<std::string_view> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = trim(text.substr(0, comma));
    if (item.empty()) throw DomainError("empty item in list");
    out.push_back(item);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  std::replace(out.begin(), out.end(), '_', '-');
  return out;
}

}  // namespace

std::vector<Setting> parse_config(std::string_view text) {
  std::vector<Setting> out;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw DomainError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string_view key = trim(view.substr(0, eq));
    if (key.empty()) {
      throw DomainError("config line " + std::to_string(line_no) + ": empty key");
    }
    out.emplace_back(std::string(key), std::string(trim(view.substr(eq + 1))));
  }
  return out;
}

std::vector<Setting> read_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (auto item : split_list(text)) out.push_back(parse_number<int>(item));
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  std::vector<double> out;
  for (auto item : split_list(text)) out.push_back(parse_number<double>(item));
  return out;
}

std::vector<MechanismKind> parse_mechanism_list(std::string_view text) {
  std::vector<MechanismKind> out;
  for (auto item : split_list(text)) out.push_back(parse_mechanism(item));
  return out;
}

bool parse_bool(std::string_view text) {
  std::string v(trim(text));
  std::transform(v.begin(), v.end(), v.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw DomainError("invalid boolean '" + v + "'");
}

void apply_setting(ExperimentSpec& spec, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  if (key == "seed") {
    spec.seed = parse_number<std::uint64_t>(value);
  } else if (key == "trials") {
    spec.trials = parse_number<int>(value);
  } else if (key == "k") {
    spec.k_grid = parse_int_list(value);
  } else if (key == "n") {
    spec.n = parse_number<int>(value);
  } else if (key == "r") {
    spec.r = parse_number<double>(value);
  } else if (key == "eps" || key == "epsilon") {
    spec.epsilon_grid = parse_double_list(value);
  } else if (key == "delta") {
    spec.delta_grid = parse_double_list(value);
  } else if (key == "mechanism") {
    spec.mechanisms = parse_mechanism_list(value);
  } else if (key == "burn-in") {
    spec.burn_in = parse_number<int>(value);
  } else if (key == "images") {
    spec.image_dir = std::string(trim(value));
  } else if (key == "eta") {
    spec.eta = parse_number<double>(value);
  } else if (key == "resample-data") {
    spec.resample_data = parse_bool(value);
  } else if (key == "measured-radius") {
    spec.measured_radius = parse_bool(value);
  } else if (key == "timing") {
    spec.record_timing = parse_bool(value);
  } else if (key == "threads") {
    spec.threads = parse_number<int>(value);
  } else {
    throw DomainError("unknown setting '" + std::string(raw_key) + "'");
  }
}

}  // namespace spdpriv
