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

#include <array>
#include <cstddef>
#include <optional>

#include "hyperwalk/core.hpp"

namespace hyperwalk::kernels {

using Tuple4 = std::array<Index, 4>;

/// Max-residual reduction over index quadruples.
///
/// Ties on the maximum keep the lexicographically smallest tuple, and
/// `first_violation` is the lexicographically smallest tuple above the
/// tolerance, so merging partial results is independent of scheduling.
struct ResidualScan {
  double tolerance = 0.0;
  double max_residual = 0.0;
  std::optional<Tuple4> worst;
  std::optional<Tuple4> first_violation;
  std::size_t checked = 0;

  bool pass() const noexcept { return max_residual <= tolerance; }

  void observe(double residual, const Tuple4& t) {
    ++checked;
    if (!worst || residual > max_residual || (residual == max_residual && t < *worst)) {
      max_residual = residual;
      worst = t;
    }
    if (residual > tolerance && (!first_violation || t < *first_violation)) {
      first_violation = t;
    }
  }

  void merge(const ResidualScan& other) {
    checked += other.checked;
    if (other.worst) {
      if (!worst || other.max_residual > max_residual ||
          (other.max_residual == max_residual && *other.worst < *worst)) {
        max_residual = other.max_residual;
        worst = other.worst;
      }
    }
    if (other.first_violation &&
        (!first_violation || *other.first_violation < *first_violation)) {
      first_violation = other.first_violation;
    }
  }
};

enum class Exec { Serial, Parallel };

}  // namespace hyperwalk::kernels
