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
#include <limits>
#include <optional>
#include <vector>

#include "hyperwalk/kernels/residual.hpp"

namespace hyperwalk::kernels {

inline constexpr std::uint32_t kUnreachable = std::numeric_limits<std::uint32_t>::max();

/// Row-major n x n hop distances, one BFS per source.
std::vector<std::uint32_t> all_pairs_bfs_serial(const std::vector<std::vector<Index>>& adjacency);
std::vector<std::uint32_t> all_pairs_bfs_parallel(
    const std::vector<std::vector<Index>>& adjacency);

inline std::vector<std::uint32_t> all_pairs_bfs(const std::vector<std::vector<Index>>& adjacency,
                                                Exec exec) {
  return exec == Exec::Serial ? all_pairs_bfs_serial(adjacency)
                              : all_pairs_bfs_parallel(adjacency);
}

/// First pair (u, v), in lexicographic order, whose intersection numbers
/// |S_i(u) n S_j(v)| differ from those of the first pair at the same
/// distance. The mismatching (i, j) is reported alongside.
struct IntersectionConflict {
  Index u;
  Index v;
  Index reference_u;
  Index reference_v;
  Index i;
  Index j;
};

std::optional<IntersectionConflict> distance_regular_scan_serial(
    const std::vector<std::uint32_t>& dist, Index n, Index diameter);
std::optional<IntersectionConflict> distance_regular_scan_parallel(
    const std::vector<std::uint32_t>& dist, Index n, Index diameter);

inline std::optional<IntersectionConflict> distance_regular_scan(
    const std::vector<std::uint32_t>& dist, Index n, Index diameter, Exec exec) {
  return exec == Exec::Serial ? distance_regular_scan_serial(dist, n, diameter)
                              : distance_regular_scan_parallel(dist, n, diameter);
}

}  // namespace hyperwalk::kernels
