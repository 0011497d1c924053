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

#include "hyperwalk/kernels/graph.hpp"

#include <tuple>

#include <omp.h>

namespace hyperwalk::kernels {
namespace {

void bfs_from(const std::vector<std::vector<Index>>& adjacency, Index source,
              std::uint32_t* row, std::vector<Index>& queue) {
  const Index n = adjacency.size();
  std::fill(row, row + n, kUnreachable);
  queue.clear();
  row[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Index v = queue[head];
    for (Index w : adjacency[v]) {
      if (row[w] != kUnreachable) continue;
      row[w] = row[v] + 1;
      queue.push_back(w);
    }
  }
}

// counts[i * (diameter+1) + j] = |S_i(u) n S_j(v)|
void intersection_counts(const std::vector<std::uint32_t>& dist, Index n, Index diameter, Index u,
                         Index v, std::vector<Index>& counts) {
  const Index width = diameter + 1;
  std::fill(counts.begin(), counts.end(), 0);
  for (Index w = 0; w < n; ++w) ++counts[dist[u * n + w] * width + dist[v * n + w]];
}

struct References {
  std::vector<std::optional<std::pair<Index, Index>>> pair;
  std::vector<std::vector<Index>> counts;
};

References reference_tables(const std::vector<std::uint32_t>& dist, Index n, Index diameter) {
  const Index width = diameter + 1;
  References refs;
  refs.pair.assign(width, std::nullopt);
  refs.counts.assign(width, std::vector<Index>(width * width, 0));
  Index found = 0;
  for (Index u = 0; u < n && found < width; ++u) {
    for (Index v = 0; v < n && found < width; ++v) {
      const Index d = dist[u * n + v];
      if (refs.pair[d]) continue;
      refs.pair[d] = {u, v};
      intersection_counts(dist, n, diameter, u, v, refs.counts[d]);
      ++found;
    }
  }
  return refs;
}

std::optional<IntersectionConflict> check_row(const std::vector<std::uint32_t>& dist, Index n,
                                              Index diameter, const References& refs, Index u,
                                              std::vector<Index>& counts) {
  const Index width = diameter + 1;
  for (Index v = 0; v < n; ++v) {
    const Index d = dist[u * n + v];
    intersection_counts(dist, n, diameter, u, v, counts);
    const auto& ref = refs.counts[d];
    for (Index p = 0; p < counts.size(); ++p) {
      if (counts[p] != ref[p]) {
        return IntersectionConflict{u, v, refs.pair[d]->first, refs.pair[d]->second, p / width,
                                    p % width};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::uint32_t> all_pairs_bfs_serial(const std::vector<std::vector<Index>>& adjacency) {
  const Index n = adjacency.size();
  std::vector<std::uint32_t> dist(n * n);
  std::vector<Index> queue;
  queue.reserve(n);
  for (Index s = 0; s < n; ++s) bfs_from(adjacency, s, dist.data() + s * n, queue);
  return dist;
}

std::vector<std::uint32_t> all_pairs_bfs_parallel(
    const std::vector<std::vector<Index>>& adjacency) {
  const Index n = adjacency.size();
  std::vector<std::uint32_t> dist(n * n);
#pragma omp parallel
  {
    std::vector<Index> queue;
    queue.reserve(n);
#pragma omp for schedule(static)
    for (long long s = 0; s < static_cast<long long>(n); ++s) {
      bfs_from(adjacency, static_cast<Index>(s), dist.data() + s * n, queue);
    }
  }
  return dist;
}

std::optional<IntersectionConflict> distance_regular_scan_serial(
    const std::vector<std::uint32_t>& dist, Index n, Index diameter) {
  const auto refs = reference_tables(dist, n, diameter);
  std::vector<Index> counts((diameter + 1) * (diameter + 1));
  for (Index u = 0; u < n; ++u) {
    if (auto c = check_row(dist, n, diameter, refs, u, counts)) return c;
  }
  return std::nullopt;
}

std::optional<IntersectionConflict> distance_regular_scan_parallel(
    const std::vector<std::uint32_t>& dist, Index n, Index diameter) {
  const auto refs = reference_tables(dist, n, diameter);
  std::optional<IntersectionConflict> first;
#pragma omp parallel
  {
    std::vector<Index> counts((diameter + 1) * (diameter + 1));
    std::optional<IntersectionConflict> local;
#pragma omp for schedule(dynamic, 1) nowait
    for (long long u = 0; u < static_cast<long long>(n); ++u) {
      if (local) continue;  // rows are visited in increasing order per thread
      local = check_row(dist, n, diameter, refs, static_cast<Index>(u), counts);
    }
#pragma omp critical(hyperwalk_dr_merge)
    {
      if (local && (!first || std::tie(local->u, local->v) < std::tie(first->u, first->v))) {
        first = local;
      }
    }
  }
  return first;
}

}  // namespace hyperwalk::kernels
