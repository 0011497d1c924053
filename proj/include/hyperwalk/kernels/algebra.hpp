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
#include "hyperwalk/structure_tensor.hpp"

namespace hyperwalk::kernels {

/// Residual |((x_i o x_j) o x_k)_l - (x_i o (x_j o x_k))_l| over all (i,j,k,l).
/// Triples that need an undefined row are skipped.
ResidualScan associativity_scan_serial(const StructureTensor& tensor, double tolerance);
ResidualScan associativity_scan_parallel(const StructureTensor& tensor, double tolerance);

inline ResidualScan associativity_scan(const StructureTensor& tensor, double tolerance,
                                       Exec exec) {
  return exec == Exec::Serial ? associativity_scan_serial(tensor, tolerance)
                              : associativity_scan_parallel(tensor, tolerance);
}

}  // namespace hyperwalk::kernels
