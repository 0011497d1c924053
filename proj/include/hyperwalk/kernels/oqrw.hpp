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

#include "hyperwalk/kernels/residual.hpp"
#include "hyperwalk/oqrw.hpp"

namespace hyperwalk::kernels {

/// Max-norm residual of condition (HB) over every (i, j, k, l). Tuples that
/// touch an undefined slot or row of a truncated input are skipped.
ResidualScan hb_scan_serial(const KrausFamily& family, const StructureTensor& tensor,
                            double tolerance);
ResidualScan hb_scan_parallel(const KrausFamily& family, const StructureTensor& tensor,
                              double tolerance);

inline ResidualScan hb_scan(const KrausFamily& family, const StructureTensor& tensor,
                            double tolerance, Exec exec) {
  return exec == Exec::Serial ? hb_scan_serial(family, tensor, tolerance)
                              : hb_scan_parallel(family, tensor, tolerance);
}

}  // namespace hyperwalk::kernels
