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

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "spdpriv/errors.hpp"
#include "spdpriv/image.hpp"

namespace spdpriv {
namespace {

class PnmHeaderReader {
 public:
  explicit PnmHeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Next whitespace-delimited header token, skipping '#' comments.
  std::string token() {
    skip_space_and_comments();
    std::string out;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      out.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (out.empty()) throw IoError("PNM: truncated header");
    return out;
  }

  int positive_int(const char* what) {
    const std::string t = token();
    if (!std::all_of(t.begin(), t.end(), [](char ch) { return std::isdigit(ch); }) ||
        t.size() > 9) {
      throw IoError(std::string("PNM: bad ") + what + " '" + t + "'");
    }
    const int v = std::stoi(t);
    if (v <= 0) throw IoError(std::string("PNM: ") + what + " must be positive");
    return v;
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size() || !std::isspace(bytes_[pos_])) {
      throw IoError("PNM: missing whitespace before raster");
    }
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RasterImage::RasterImage(int height, int width, int channels, std::vector<double> data)
    : height_(height), width_(width), channels_(channels), data_(std::move(data)) {
  if (height < 1 || width < 1) throw DomainError("image must have positive size");
  if (channels != 1 && channels != 3) throw DomainError("image channels must be 1 or 3");
  const auto expected = static_cast<std::size_t>(height) * width * channels;
  if (data_.size() != expected) {
    throw DomainError("image data has " + std::to_string(data_.size()) +
                      " samples, expected " + std::to_string(expected));
  }
  for (double v : data_) {
    if (!(v >= 0.0 && v <= 1.0)) throw DomainError("image intensity outside [0, 1]");
  }
}

RasterImage RasterImage::constant(int height, int width, int channels, double value) {
  const auto n = static_cast<std::size_t>(std::max(height, 0)) * std::max(width, 0) *
                 std::max(channels, 0);
  return RasterImage(height, width, channels, std::vector<double>(n, value));
}

RasterImage parse_pnm(std::span<const std::uint8_t> bytes) {
  PnmHeaderReader reader(bytes);
  const std::string magic = reader.token();
  int channels = 0;
  if (magic == "P5") {
    channels = 1;
  } else if (magic == "P6") {
    channels = 3;
  } else {
    throw IoError("PNM: unsupported magic '" + magic + "' (expected P5 or P6)");
  }
  const int width = reader.positive_int("width");
  const int height = reader.positive_int("height");
  const int maxval = reader.positive_int("maxval");
  if (maxval > 255) throw IoError("PNM: only 8-bit samples (maxval <= 255) are supported");
  const std::size_t offset = reader.raster_offset();
  const auto count = static_cast<std::size_t>(width) * height * channels;
  if (bytes.size() < offset + count) throw IoError("PNM: truncated raster");
  std::vector<double> data(count);
  for (std::size_t i = 0; i < count; ++i) {
    const unsigned v = bytes[offset + i];
    if (v > static_cast<unsigned>(maxval)) throw IoError("PNM: sample exceeds maxval");
    data[i] = static_cast<double>(v) / maxval;
  }
  return RasterImage(height, width, channels, std::move(data));
}

RasterImage read_pnm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open image " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                        std::istreambuf_iterator<char>());
  try {
    return parse_pnm(bytes);
  } catch (const Error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_pnm(const RasterImage& image, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write image " + path.string());
  out << (image.channels() == 1 ? "P5" : "P6") << '\n'
      << image.width() << ' ' << image.height() << "\n255\n";
  for (double v : image.data()) {
    out.put(static_cast<char>(static_cast<std::uint8_t>(std::lround(v * 255.0))));
  }
  if (!out) throw IoError("failed writing image " + path.string());
}

}  // namespace spdpriv
