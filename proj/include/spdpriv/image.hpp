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

#ifndef SPDPRIV_IMAGE_HPP_
#define SPDPRIV_IMAGE_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace spdpriv {

// h x w x c image with intensities in [0, 1], stored row-major with
// interleaved channels.
class RasterImage {
 public:
  // Throws DomainError on zero size, channels not in {1, 3}, a data size
  // that does not match, or any intensity outside [0, 1].
  RasterImage(int height, int width, int channels, std::vector<double> data);

  static RasterImage constant(int height, int width, int channels, double value);

  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  double at(int row, int col, int channel = 0) const {
    return data_[(static_cast<std::size_t>(row) * width_ + col) * channels_ + channel];
  }
  const std::vector<double>& data() const { return data_; }

 private:
  int height_;
  int width_;
  int channels_;
  std::vector<double> data_;
};

// Binary PGM (P5, one channel) or PPM (P6, three channels) with 8-bit
// samples. Samples are divided by maxval (255 for standard files).
RasterImage parse_pnm(std::span<const std::uint8_t> bytes);
RasterImage read_pnm(const std::filesystem::path& path);

// Writes P5 or P6 with maxval 255, rounding intensities to the nearest level.
void write_pnm(const RasterImage& image, const std::filesystem::path& path);

}  // namespace spdpriv

#endif  // SPDPRIV_IMAGE_HPP_
