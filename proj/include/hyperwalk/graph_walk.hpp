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
#include <functional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hyperwalk/graph.hpp"
#include "hyperwalk/rational.hpp"
#include "hyperwalk/structure_tensor.hpp"

namespace hyperwalk {

/// Outcome of a structural graph check. `witness` holds vertex/radius indices
/// whose meaning is spelled out in `detail`.
struct GraphCheck {
  bool holds = true;
  std::string detail;
  std::vector<Index> witness;
};

/// Wildberger constants
///   p_{i,j}^k = 1/|S_i(v0)| sum_{v in S_i(v0)} |S_j(v) n S_k(v0)| / |S_j(v)|
/// as exact rationals. On a bounded window, rows with i + j > radius are left
/// undefined. Throws EmptySphere(v) when some needed S_j(v) is empty.
ExactTensor wildberger_tensor(const PointedGraph& graph, const SphereTable& spheres);
ExactTensor wildberger_tensor(const PointedGraph& graph);

/// Condition (S): |S_i(v)| is constant in v, and |S_i(v) n S_j(v0)| is
/// constant for v in S_k(v0). Witness (i, v, v') or (i, j, k, v, v').
GraphCheck check_condition_S(const PointedGraph& graph, const SphereTable& spheres);

/// |S_i(u) n S_j(v)| depends only on (i, j, d(u, v)). Witness (u, v, u', v', i, j).
GraphCheck check_distance_regular(const PointedGraph& graph, const SphereTable& spheres,
                                  kernels::Exec exec = kernels::Exec::Parallel);

/// Standing assumption S_n(v) != {} for every vertex v and n in I(G, v0).
/// Witness (v, n).
GraphCheck check_sphere_assumption(const PointedGraph& graph, const SphereTable& spheres);

inline constexpr std::uint64_t kDefaultPathCap = 10'000'000;

/// Brute-force nested sum over v1 in S_k1(v0), ..., vn in S_kn(v_{n-1}) of
/// prod 1/|S_kj(v_{j-1})|, accumulated at index d(vn, v0).
///
/// Throws EmptySphere, PathCapExceeded, IndexOutOfRange, or (on bounded
/// windows) TruncationExceeded when a sphere would touch the boundary.
template <class T>
std::vector<T> path_sum_distribution(const PointedGraph& graph, const SphereTable& spheres,
                                     const Word& word, std::uint64_t path_cap = kDefaultPathCap) {
  const Index m = spheres.index_size();
  for (Index k : word) {
    if (k >= m) throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(k));
  }
  const auto boundary = graph.boundary_radius();
  const Index base = graph.base();
  std::vector<T> out(m, T(0));
  std::uint64_t paths = 0;

  std::function<void(Index, std::size_t, const T&)> walk = [&](Index v, std::size_t depth,
                                                               const T& weight) {
    if (depth == word.size()) {
      if (++paths > path_cap) {
        throw Error(ErrorCode::PathCapExceeded,
                    "more than " + std::to_string(path_cap) + " paths");
      }
      out[spheres.distance(v, base)] += weight;
      return;
    }
    const Index k = word[depth];
    if (boundary && spheres.distance(v, base) + k > *boundary) {
      throw Error(ErrorCode::TruncationExceeded,
                  "sphere S_" + std::to_string(k) + "(" + graph.labels()[v] +
                      ") touches the window boundary",
                  v);
    }
    const auto& sphere = spheres.sphere(v, k);
    if (sphere.empty()) {
      throw Error(ErrorCode::EmptySphere,
                  "S_" + std::to_string(k) + "(" + graph.labels()[v] + ") is empty", v);
    }
    T next_weight = weight;
    if constexpr (std::is_same_v<T, Rational>) {
      next_weight /= Rational(static_cast<long long>(sphere.size()));
    } else {
      next_weight /= static_cast<double>(sphere.size());
    }
    for (Index w : sphere) walk(w, depth + 1, next_weight);
  };
  walk(base, 0, T(1));
  return out;
}

/// Transition matrices (P_k)_{i,j} = Q_{k,i}^j, each row-stochastic.
using TransitionMatrixFamily = std::vector<Eigen::MatrixXd>;

TransitionMatrixFamily transition_family(const StructureTensor& tensor);

}  // namespace hyperwalk
