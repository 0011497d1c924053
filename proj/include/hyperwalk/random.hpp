// Copyright 2026 The Hyperwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "hyperwalk/core.hpp"

namespace hyperwalk {

/// Counter-based SplitMix64 stream.
///
/// The n-th draw is mix64(key + n * 0x9e3779b97f4a7c15), so a stream is fully
/// determined by its 64-bit key. split(tag) derives an independent child key
/// as mix64(key ^ mix64(tag + 0x632be59bd9b4e019)). Gaussians use the
/// Box-Muller transform on two consecutive uniforms; nothing depends on the
/// standard library's distribution implementations, so draws are portable.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) noexcept : key_(key) {}

  static std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next_u64() noexcept { return mix64(key_ + (++counter_) * 0x9e3779b97f4a7c15ULL); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal via Box-Muller (cosine branch only).
  double normal() noexcept;

  CounterRng split(std::uint64_t tag) const noexcept {
    return CounterRng(mix64(key_ ^ mix64(tag + 0x632be59bd9b4e019ULL)));
  }

  std::uint64_t key() const noexcept { return key_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// h x h matrix with i.i.d. standard complex Gaussian entries.
Eigen::MatrixXcd random_complex_matrix(Index rows, Index cols, CounterRng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded into Q.
Eigen::MatrixXcd random_unitary(Index h_dim, CounterRng& rng);

Eigen::VectorXcd random_unit_vector(Index h_dim, CounterRng& rng);

}  // namespace hyperwalk
