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

#include "spdpriv/descriptors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "spdpriv/errors.hpp"

namespace spdpriv {
namespace {

constexpr std::array<std::array<double, 3>, 3> kFirstX = {{
    {1, 0, -1},
    {2, 0, -2},
    {1, 0, -1},
}};
constexpr std::array<std::array<double, 3>, 3> kFirstY = {{
    {1, 2, 1},
    {0, 0, 0},
    {-1, -2, -1},
}};
constexpr std::array<std::array<double, 5>, 5> kSecondX = {{
    {1, 0, -2, 0, 1},
    {4, 0, -8, 0, 4},
    {6, 0, -12, 0, 6},
    {4, 0, -8, 0, 4},
    {1, 0, -2, 0, 1},
}};
constexpr std::array<std::array<double, 5>, 5> kSecondY = {{
    {1, 4, 6, 4, 1},
    {0, 0, 0, 0, 0},
    {-2, -8, -12, -8, -2},
    {0, 0, 0, 0, 0},
    {1, 4, 6, 4, 1},
}};

// Single-channel plane, row-major.
struct Plane {
  int height;
  int width;
  std::vector<double> v;

  double clamped(int r, int c) const {
    r = std::clamp(r, 0, height - 1);
    c = std::clamp(c, 0, width - 1);
    return v[static_cast<std::size_t>(r) * width + c];
  }
};

template <std::size_t N>
std::vector<double> filter(const Plane& p,
                           const std::array<std::array<double, N>, N>& kernel,
                           double scale) {
  constexpr int half = static_cast<int>(N) / 2;
  std::vector<double> out(p.v.size());
  for (int r = 0; r < p.height; ++r) {
    for (int c = 0; c < p.width; ++c) {
      double acc = 0.0;
      for (int dr = -half; dr <= half; ++dr) {
        for (int dc = -half; dc <= half; ++dc) {
          const double w = kernel[dr + half][dc + half];
          if (w != 0.0) acc += w * p.clamped(r + dr, c + dc);
        }
      }
      out[static_cast<std::size_t>(r) * p.width + c] = acc * scale;
    }
  }
  return out;
}

Plane derivative_plane(const RasterImage& image) {
  Plane p{image.height(), image.width(),
          std::vector<double>(static_cast<std::size_t>(image.height()) * image.width())};
  for (int r = 0; r < image.height(); ++r) {
    for (int c = 0; c < image.width(); ++c) {
      double v = image.at(r, c, 0);
      if (image.channels() == 3) {
        v = 0.299 * image.at(r, c, 0) + 0.587 * image.at(r, c, 1) +
            0.114 * image.at(r, c, 2);
        v = std::clamp(v, 0.0, 1.0);
      }
      p.v[static_cast<std::size_t>(r) * p.width + c] = v;
    }
  }
  return p;
}

double normalized_coord(int i, int extent) {
  return extent > 1 ? static_cast<double>(i) / (extent - 1) : 0.0;
}

}  // namespace

int feature_dim(int channels) {
  if (channels != 1 && channels != 3) throw DomainError("channels must be 1 or 3");
  return 8 + channels;
}

FeatureField extract_features(const RasterImage& image) {
  const int h = image.height();
  const int w = image.width();
  const int c = image.channels();
  const int p = feature_dim(c);

  const Plane plane = derivative_plane(image);
  const std::vector<double> ix = filter(plane, kFirstX, 1.0 / 4.0);
  const std::vector<double> iy = filter(plane, kFirstY, 1.0 / 4.0);
  const std::vector<double> ixx = filter(plane, kSecondX, 1.0 / 32.0);
  const std::vector<double> iyy = filter(plane, kSecondY, 1.0 / 32.0);

  FeatureField field{h, w, p, Matrix(static_cast<Eigen::Index>(h) * w, p)};
  for (int r = 0; r < h; ++r) {
    for (int col = 0; col < w; ++col) {
      const auto idx = static_cast<std::size_t>(r) * w + col;
      const auto row = static_cast<Eigen::Index>(idx);
      int f = 0;
      field.values(row, f++) = normalized_coord(col, w);
      field.values(row, f++) = normalized_coord(r, h);
      for (int ch = 0; ch < c; ++ch) field.values(row, f++) = image.at(r, col, ch);
      const double ax = std::abs(ix[idx]);
      const double ay = std::abs(iy[idx]);
      field.values(row, f++) = ax;
      field.values(row, f++) = ay;
      field.values(row, f++) = std::abs(ixx[idx]);
      field.values(row, f++) = std::abs(iyy[idx]);
      field.values(row, f++) = std::hypot(ax, ay);
      // atan(|I_x| / |I_y|): pi/2 when only I_y vanishes, 0 when both do.
      field.values(row, f++) = std::atan2(ax, ay);
    }
  }
  return field;
}

SpdMatrix covariance_from_features(const Matrix& features, double eta) {
  if (!(eta > 0.0)) throw DomainError("descriptor eta must be positive");
  if (features.rows() < 1 || features.cols() < 1) {
    throw DomainError("feature field is empty");
  }
  const Eigen::RowVectorXd mu = features.colwise().mean();
  const Matrix centered = features.rowwise() - mu;
  Matrix cov = (centered.transpose() * centered) / static_cast<double>(features.rows());
  cov.diagonal().array() += eta;
  return SpdMatrix::from(cov);
}

SpdMatrix covariance_descriptor(const RasterImage& image, const DescriptorParams& params) {
  return covariance_from_features(extract_features(image).values, params.eta);
}

double descriptor_spectral_bound(int channels, double eta) {
  if (!(eta > 0.0)) throw DomainError("descriptor eta must be positive");
  // Largest squared feature norm: 7 unit-bounded entries (9 for RGB) plus
  // a gradient magnitude <= sqrt(2) and an angle <= pi/2.
  return (feature_dim(channels) == 9 ? 12.0 : 14.0) + eta;
}

double descriptor_radius_bound(int channels, double eta) {
  const double spectral = descriptor_spectral_bound(channels, eta);
  const double p = feature_dim(channels);
  return std::sqrt(p) * std::max(std::abs(std::log(eta)), std::abs(std::log(spectral)));
}

}  // namespace spdpriv
