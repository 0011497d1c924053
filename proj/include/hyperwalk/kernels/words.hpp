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

#include <cstddef>
#include <exception>
#include <optional>

#include <omp.h>

#include "hyperwalk/core.hpp"
#include "hyperwalk/kernels/residual.hpp"

namespace hyperwalk::kernels {

/// Max-residual reduction over a batch of numbered cases. Ties keep the
/// smallest case number so serial and parallel runs report the same worst case.
struct CaseScan {
  double max_residual = 0.0;
  std::optional<std::size_t> worst_case;
  std::optional<Index> worst_entry;
  std::size_t checked = 0;
  std::size_t skipped = 0;

  void observe(double residual, std::size_t c, Index entry) {
    ++checked;
    if (!worst_case || residual > max_residual ||
        (residual == max_residual && c < *worst_case)) {
      max_residual = residual;
      worst_case = c;
      worst_entry = entry;
    }
  }

  void merge(const CaseScan& o) {
    checked += o.checked;
    skipped += o.skipped;
    if (!o.worst_case) return;
    if (!worst_case || o.max_residual > max_residual ||
        (o.max_residual == max_residual && *o.worst_case < *worst_case)) {
      max_residual = o.max_residual;
      worst_case = o.worst_case;
      worst_entry = o.worst_entry;
    }
  }
};

/// Runs body(c, acc) for c in [0, count). Exceptions thrown inside the
/// parallel region are rethrown afterwards (the one with the smallest c).
template <class Body>
CaseScan case_scan(std::size_t count, Exec exec, Body&& body) {
  CaseScan total;
  if (exec == Exec::Serial) {
    for (std::size_t c = 0; c < count; ++c) body(c, total);
    return total;
  }
  std::exception_ptr error;
  std::size_t error_case = count;
#pragma omp parallel
  {
    CaseScan local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long long c = 0; c < static_cast<long long>(count); ++c) {
      try {
        body(static_cast<std::size_t>(c), local);
      } catch (...) {
#pragma omp critical(hyperwalk_case_error)
        if (static_cast<std::size_t>(c) < error_case) {
          error_case = static_cast<std::size_t>(c);
          error = std::current_exception();
        }
      }
    }
#pragma omp critical(hyperwalk_case_merge)
    total.merge(local);
  }
  if (error) std::rethrow_exception(error);
  return total;
}

}  // namespace hyperwalk::kernels
