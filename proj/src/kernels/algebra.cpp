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

#include "hyperwalk/kernels/algebra.hpp"

#include <cmath>
#include <vector>

#include <omp.h>

namespace hyperwalk::kernels {
namespace {

bool rows_defined(const StructureTensor& t, Index a, Index b) { return t.defined(a, b); }

// Accumulates ((x_i o x_j) o x_k) into `left` and (x_i o (x_j o x_k)) into
// `right`. Returns false when a needed row is undefined.
bool expand_triple(const StructureTensor& t, Index i, Index j, Index k, std::vector<double>& left,
                   std::vector<double>& right) {
  std::fill(left.begin(), left.end(), 0.0);
  std::fill(right.begin(), right.end(), 0.0);
  if (!rows_defined(t, i, j) || !rows_defined(t, j, k)) return false;
  for (const auto& a : t.row(i, j)) {
    if (!rows_defined(t, a.k, k)) return false;
    for (const auto& b : t.row(a.k, k)) left[b.k] += a.value * b.value;
  }
  for (const auto& a : t.row(j, k)) {
    if (!rows_defined(t, i, a.k)) return false;
    for (const auto& b : t.row(i, a.k)) right[b.k] += a.value * b.value;
  }
  return true;
}

void scan_pair(const StructureTensor& t, Index i, Index j, std::vector<double>& left,
               std::vector<double>& right, ResidualScan& acc) {
  const Index n = t.size();
  for (Index k = 0; k < n; ++k) {
    if (!expand_triple(t, i, j, k, left, right)) continue;
    for (Index l = 0; l < n; ++l) acc.observe(std::abs(left[l] - right[l]), {i, j, k, l});
  }
}

}  // namespace

ResidualScan associativity_scan_serial(const StructureTensor& tensor, double tolerance) {
  const Index n = tensor.size();
  ResidualScan acc;
  acc.tolerance = tolerance;
  std::vector<double> left(n), right(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) scan_pair(tensor, i, j, left, right, acc);
  }
  return acc;
}

ResidualScan associativity_scan_parallel(const StructureTensor& tensor, double tolerance) {
  const Index n = tensor.size();
  const long long pairs = static_cast<long long>(n * n);
  ResidualScan total;
  total.tolerance = tolerance;
#pragma omp parallel
  {
    ResidualScan local;
    local.tolerance = tolerance;
    std::vector<double> left(n), right(n);
#pragma omp for schedule(dynamic, 4) nowait
    for (long long p = 0; p < pairs; ++p) {
      scan_pair(tensor, static_cast<Index>(p) / n, static_cast<Index>(p) % n, left, right, local);
    }
#pragma omp critical(hyperwalk_assoc_merge)
    total.merge(local);
  }
  return total;
}

}  // namespace hyperwalk::kernels
