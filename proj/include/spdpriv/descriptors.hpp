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

// Region covariance descriptors of whole images.
//
// Each pixel is mapped to
//   [x, y, I (one entry per channel), |I_x|, |I_y|, |I_xx|, |I_yy|,
//    sqrt(I_x^2 + I_y^2), atan(|I_x| / |I_y|)]
// and the descriptor is the population covariance of those vectors plus
// eta * I. Derivatives of RGB images are taken on the luminance
// 0.299 R + 0.587 G + 0.114 B, so gray images give 9 features and RGB 11.

#ifndef SPDPRIV_DESCRIPTORS_HPP_
#define SPDPRIV_DESCRIPTORS_HPP_

#include "spdpriv/geometry.hpp"
#include "spdpriv/image.hpp"

namespace spdpriv {

struct FeatureField {
  int height;
  int width;
  int feat_dim;
  // One row per pixel, row-major pixel order.
  Matrix values;
};

struct DescriptorParams {
  double eta = 1e-6;
};

// Number of features for an image with `channels` channels (9 or 11).
int feature_dim(int channels);

// Derivative filters use replicate-edge padding:
//   first order:  Sobel / 4,
//   second order: 5x5 binomial-smoothed [1 0 -2 0 1] / 32.
FeatureField extract_features(const RasterImage& image);

// (1/N) sum (f - mu)(f - mu)^T + eta * I over the rows of `features`.
SpdMatrix covariance_from_features(const Matrix& features, double eta);

SpdMatrix covariance_descriptor(const RasterImage& image,
                                const DescriptorParams& params = {});

// Upper bound on the spectral norm of any descriptor: 12 + eta (gray) or
// 14 + eta (RGB).
double descriptor_spectral_bound(int channels, double eta);

// Upper bound on ||logm R_eta(I)||_F:
// sqrt(p) * max(|ln eta|, |ln(L)|) with p = feature_dim and L the spectral
// bound above.
double descriptor_radius_bound(int channels, double eta);

}  // namespace spdpriv

#endif  // SPDPRIV_DESCRIPTORS_HPP_
