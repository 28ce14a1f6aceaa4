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

#ifndef SPDPRIV_CONFIG_HPP_
#define SPDPRIV_CONFIG_HPP_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spdpriv/bench.hpp"

namespace spdpriv {

using Setting = std::pair<std::string, std::string>;

// Flat "key = value" lines; '#' starts a comment. Keys are returned in file
// order so later lines override earlier ones when applied.
std::vector<Setting> parse_config(std::string_view text);
std::vector<Setting> read_config(const std::filesystem::path& path);

std::vector<int> parse_int_list(std::string_view text);
std::vector<double> parse_double_list(std::string_view text);
std::vector<MechanismKind> parse_mechanism_list(std::string_view text);
bool parse_bool(std::string_view text);

// Applies one setting. Recognised keys: seed, trials, k, n, r, eps (or
// epsilon), delta, mechanism, burn-in, images, eta, resample-data,
// measured-radius, timing, threads. Underscores and dashes are
// interchangeable. Unknown keys throw DomainError.
void apply_setting(ExperimentSpec& spec, std::string_view key, std::string_view value);

}  // namespace spdpriv

#endif  // SPDPRIV_CONFIG_HPP_
