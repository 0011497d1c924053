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

// Named fixtures: the small hypergroups, tensors and Kraus families used by
// the tests, the acceptance suite and `hyperwalk gen`.

#pragma once

#include <vector>

#include "hyperwalk/hypergroup.hpp"
#include "hyperwalk/oqrw.hpp"

namespace hyperwalk::fixtures {

/// Wildberger hypergroup of the 4-cycle: x1 o x1 = (x0 + x2)/2, x1 o x2 = x1,
/// x2 o x2 = x0.
Hypergroup c4();

/// Hermitian hypergroup of Z on the window {0..radius}:
/// x_i o x_j = (x_|i-j| + x_{i+j})/2, rows with i + j > radius undefined.
Hypergroup z_window(Index radius);

/// Group tables with identity at index 0.
struct GroupTable {
  std::vector<std::vector<Index>> multiplication;
  std::vector<Index> inverse;
};

GroupTable cyclic_group_table(Index n);

/// Permutations of {0,1,2} in lexicographic order, (a b)(x) = a(b(x)).
GroupTable s3_table();

Hypergroup cyclic_group(Index n);
Hypergroup s3_group();

/// Class hypergroup of a finite group: conjugacy classes ordered by their
/// smallest member, x_C o x_D = normalized class of the product set.
Hypergroup class_hypergroup(const GroupTable& group);
Hypergroup s3_classes();

/// Left zero semigroup of order two: Q_{0,j}^0 = Q_{1,j}^1 = 1. Not unital.
StructureTensor lo2();

/// C4 constants with x1 o x1 = 0.6 x0 + 0.4 x2; not associative.
StructureTensor perturbed_c4();

/// Three-point family with B at (0,1;1), C at (2,1;1) and identities that
/// complete every slot.
CMatrix three_point_b();
CMatrix three_point_c();
KrausFamily three_point_family();
BlockState three_point_state(double x);

/// Walk on {0..radius} with B_k = diag(sqrt x, sqrt(1-x)) sending j to j+k and
/// C_k = diag(sqrt(1-x), sqrt x) sending j to |j-k|. Slots with j + k > radius
/// are undefined.
KrausFamily lattice_family(Index radius, double x = 0.5);
BlockState lattice_state(Index radius);

/// Commuting pair with A0^* A0 + A1^* A1 = 1.
CMatrix commuting_a0();
CMatrix commuting_a1();

/// B_{i,j;k} = A_i for all j, k in {0,1}.
KrausFamily stationary_family();

/// B_{i,j;0} = A_i and B_{i,j;1} = 1/sqrt 2.
KrausFamily left_zero_family();

/// (1/2) (x) |0><0| on D = {0,1}, h = 2.
BlockState half_identity_state();

}  // namespace hyperwalk::fixtures
