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

#include "hyperwalk/kernels/oqrw.hpp"

#include <vector>

#include <omp.h>

namespace hyperwalk::kernels {
namespace {

// Gram matrices B^* B per block; an empty matrix stands for a zero block.
struct GramTable {
  Index d;
  Index h;
  std::vector<CMatrix> gram;  // (i * d + j) * d + k

  explicit GramTable(const KrausFamily& family)
      : d(family.d_size()), h(family.h_dim()), gram(d * d * d) {
    for (Index j = 0; j < d; ++j) {
      for (Index k = 0; k < d; ++k) {
        if (!family.slot_defined(j, k)) continue;
        for (const auto& t : family.slot(j, k)) {
          gram[(t.i * d + j) * d + k] = t.matrix.adjoint() * t.matrix;
        }
      }
    }
  }

  const CMatrix& at(Index i, Index j, Index k) const { return gram[(i * d + j) * d + k]; }
};

// Residual at (i, j, k, l), or a negative value when the tuple reaches an
// undefined slot or row.
double hb_residual(const KrausFamily& family, const StructureTensor& tensor, const GramTable& g,
                   Index i, Index j, Index k, Index l, CMatrix& lhs, CMatrix& rhs) {
  if (!family.slot_defined(j, l) || !tensor.defined(k, l)) return -1.0;
  lhs.setZero();
  rhs.setZero();
  for (const auto& t : family.slot(j, l)) {
    if (!family.slot_defined(t.i, k)) return -1.0;
    const CMatrix& inner = g.at(i, t.i, k);
    if (inner.size() == 0) continue;
    lhs.noalias() += t.matrix.adjoint() * inner * t.matrix;
  }
  for (const auto& q : tensor.row(k, l)) {
    if (!family.slot_defined(j, q.k)) return -1.0;
    const CMatrix& gm = g.at(i, j, q.k);
    if (gm.size() != 0) rhs += q.value * gm;
  }
  return max_abs(lhs - rhs);
}

void scan_pair(const KrausFamily& family, const StructureTensor& tensor, const GramTable& g,
               Index i, Index j, ResidualScan& acc) {
  const Index d = g.d;
  CMatrix lhs(g.h, g.h), rhs(g.h, g.h);
  for (Index k = 0; k < d; ++k) {
    for (Index l = 0; l < d; ++l) {
      const double r = hb_residual(family, tensor, g, i, j, k, l, lhs, rhs);
      if (r >= 0.0) acc.observe(r, {i, j, k, l});
    }
  }
}

}  // namespace

ResidualScan hb_scan_serial(const KrausFamily& family, const StructureTensor& tensor,
                            double tolerance) {
  const GramTable g(family);
  ResidualScan acc;
  acc.tolerance = tolerance;
  for (Index i = 0; i < g.d; ++i) {
    for (Index j = 0; j < g.d; ++j) scan_pair(family, tensor, g, i, j, acc);
  }
  return acc;
}

ResidualScan hb_scan_parallel(const KrausFamily& family, const StructureTensor& tensor,
                              double tolerance) {
  const GramTable g(family);
  const long long pairs = static_cast<long long>(g.d * g.d);
  ResidualScan total;
  total.tolerance = tolerance;
#pragma omp parallel
  {
    ResidualScan local;
    local.tolerance = tolerance;
#pragma omp for schedule(dynamic, 2) nowait
    for (long long p = 0; p < pairs; ++p) {
      scan_pair(family, tensor, g, static_cast<Index>(p) / g.d, static_cast<Index>(p) % g.d,
                local);
    }
#pragma omp critical(hyperwalk_hb_merge)
    total.merge(local);
  }
  return total;
}

}  // namespace hyperwalk::kernels
