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

// Counter-based pseudo-random generation.
//
// Rng wraps a Philox4x32-10 block cipher keyed by a 64-bit seed. The 128-bit
// counter is split into a 64-bit stream id (high half) and a 64-bit block
// index (low half), so any number of independent, reproducible substreams
// can be carved out of one seed without coordination between threads.

#ifndef SPDPRIV_RNG_HPP_
#define SPDPRIV_RNG_HPP_

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <random>

namespace spdpriv {

// One Philox4x32-10 block: 10 rounds over `counter` under `key`.
std::array<std::uint32_t, 4> philox4x32_10(std::array<std::uint32_t, 4> counter,
                                           std::array<std::uint32_t, 2> key);

// Hashes a tuple of integers into a stream id (SplitMix64 finalizer chain).
std::uint64_t derive_stream(std::initializer_list<std::uint64_t> parts);

// Single-owner generator state. Satisfies UniformRandomBitGenerator.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()();

  // Standard normal draw.
  double normal() { return normal_(*this); }
  // Uniform on [0, 1).
  double uniform() { return uniform_(*this); }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

  // Independent generator for the same seed, stream derive_stream(parts...).
  Rng substream(std::initializer_list<std::uint64_t> parts) const {
    return Rng(seed_, derive_stream(parts));
  }

 private:
  void refill();

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  int used_ = 2;  // 64-bit words consumed from buffer_
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace spdpriv

#endif  // SPDPRIV_RNG_HPP_
