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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperwalk/core.hpp"
#include "hyperwalk/kernels/residual.hpp"

namespace hyperwalk {

using Edge = std::pair<Index, Index>;

/// A finite simple connected graph with a base vertex.
///
/// Finite windows of infinite Cayley graphs carry `boundary_radius`: the
/// graph is the ball of that radius around the base, and any evaluation that
/// would reach past it throws TruncationExceeded.
class PointedGraph {
 public:
  /// Throws InvalidGraph (loop, repeated edge, bad index) or DisconnectedGraph.
  PointedGraph(std::vector<std::string> labels, std::vector<Edge> edges, Index base,
               std::optional<Index> boundary_radius = std::nullopt);

  Index vertex_count() const noexcept { return labels_.size(); }
  Index base() const noexcept { return base_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<Index>& neighbors(Index v) const { return adjacency_.at(v); }
  const std::vector<std::vector<Index>>& adjacency() const noexcept { return adjacency_; }
  std::optional<Index> boundary_radius() const noexcept { return boundary_radius_; }

  /// Index of the vertex with this label; throws InvalidGraph if absent.
  Index vertex(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Index>> adjacency_;
  Index base_;
  std::optional<Index> boundary_radius_;
};

/// All-pairs shortest-path distances and the spheres S_n(v).
class SphereTable {
 public:
  explicit SphereTable(const PointedGraph& graph, kernels::Exec exec = kernels::Exec::Parallel);

  Index vertex_count() const noexcept { return n_; }
  Index distance(Index v, Index w) const { return dist_[v * n_ + w]; }
  /// S_r(v); empty when r exceeds the eccentricity of v.
  const std::vector<Index>& sphere(Index v, Index r) const;
  /// |I(G, v0)|: the distance set is {0, ..., index_size()-1}.
  Index index_size() const noexcept { return index_size_; }
  std::vector<Index> index_set() const;
  Index base() const noexcept { return base_; }
  Index diameter() const noexcept { return diameter_; }
  const std::vector<std::uint32_t>& distances() const noexcept { return dist_; }

 private:
  Index n_;
  Index base_;
  Index index_size_;
  Index diameter_;
  std::vector<std::uint32_t> dist_;
  std::vector<std::vector<std::vector<Index>>> spheres_;
  std::vector<Index> empty_;
};

SphereTable build_spheres(const PointedGraph& graph);

enum class GraphKind { Cycle, Complete, Hypercube, Path, LineWindow, FreeBall };

/// Parameters of a generated fixture graph. `a` is n, d or R; `b` is the
/// radius of a free-group ball (with `a` generators).
struct GraphSpec {
  GraphKind kind;
  Index a = 0;
  Index b = 0;

  static GraphSpec cycle(Index n) { return {GraphKind::Cycle, n}; }
  static GraphSpec complete(Index n) { return {GraphKind::Complete, n}; }
  static GraphSpec hypercube(Index d) { return {GraphKind::Hypercube, d}; }
  static GraphSpec path(Index n) { return {GraphKind::Path, n}; }
  static GraphSpec line_window(Index radius) { return {GraphKind::LineWindow, radius}; }
  static GraphSpec free_ball(Index generators, Index radius) {
    return {GraphKind::FreeBall, generators, radius};
  }

  /// Parses "cycle(4)", "free_ball(2,3)", ...
  static GraphSpec parse(const std::string& text);
};

/// Builds the named graph. Base is vertex "0" (the identity "e" for free
/// balls, the end vertex for paths). Throws InvalidArgument on bad sizes.
PointedGraph generate_graph(const GraphSpec& spec);

}  // namespace hyperwalk
