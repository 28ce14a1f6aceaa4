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

#ifndef SPDPRIV_MATRIX_IO_HPP_
#define SPDPRIV_MATRIX_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "spdpriv/geometry.hpp"

namespace spdpriv {

// k lines of k decimals separated by whitespace and/or commas. Blank lines
// and lines starting with '#' are ignored. Throws IoError on ragged or
// non-square input.
Matrix parse_matrix(std::string_view text);
Matrix read_matrix(const std::filesystem::path& path);

// One row per line, entries in shortest round-trip form.
void write_matrix(std::ostream& out, const Matrix& m, char separator = ' ');

// Shortest decimal that parses back to exactly `v`.
std::string format_double(double v);

}  // namespace spdpriv

#endif  // SPDPRIV_MATRIX_IO_HPP_
