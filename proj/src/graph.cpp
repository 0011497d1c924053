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

#include "hyperwalk/graph.hpp"

#include <algorithm>
#include <map>
#include <regex>
#include <set>

#include "hyperwalk/kernels/graph.hpp"

namespace hyperwalk {

PointedGraph::PointedGraph(std::vector<std::string> labels, std::vector<Edge> edges, Index base,
                           std::optional<Index> boundary_radius)
    : labels_(std::move(labels)),
      edges_(std::move(edges)),
      adjacency_(labels_.size()),
      base_(base),
      boundary_radius_(boundary_radius) {
  const Index n = labels_.size();
  if (n == 0) throw Error(ErrorCode::InvalidGraph, "graph has no vertices");
  if (base_ >= n) throw Error(ErrorCode::InvalidGraph, "base vertex out of range");
  std::set<std::string> seen_labels;
  for (const auto& l : labels_) {
    if (!seen_labels.insert(l).second) {
      throw Error(ErrorCode::InvalidGraph, "duplicate vertex label '" + l + "'");
    }
  }
  std::set<Edge> seen;
  for (const auto& [a, b] : edges_) {
    if (a >= n || b >= n) throw Error(ErrorCode::InvalidGraph, "edge endpoint out of range");
    if (a == b) throw Error(ErrorCode::InvalidGraph, "loop at vertex '" + labels_[a] + "'", a);
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second) {
      throw Error(ErrorCode::InvalidGraph,
                  "repeated edge [" + labels_[a] + "," + labels_[b] + "]");
    }
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());

  std::vector<bool> reached(n, false);
  std::vector<Index> stack{base_};
  reached[base_] = true;
  Index count = 1;
  while (!stack.empty()) {
    const Index v = stack.back();
    stack.pop_back();
    for (Index w : adjacency_[v]) {
      if (reached[w]) continue;
      reached[w] = true;
      ++count;
      stack.push_back(w);
    }
  }
  if (count != n) {
    const auto it = std::find(reached.begin(), reached.end(), false);
    const Index lost = static_cast<Index>(it - reached.begin());
    throw Error(ErrorCode::DisconnectedGraph,
                "vertex '" + labels_[lost] + "' is unreachable from the base", lost);
  }
}

Index PointedGraph::vertex(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw Error(ErrorCode::InvalidGraph, "unknown vertex '" + label + "'");
  return static_cast<Index>(it - labels_.begin());
}

SphereTable::SphereTable(const PointedGraph& graph, kernels::Exec exec)
    : n_(graph.vertex_count()), base_(graph.base()) {
  dist_ = kernels::all_pairs_bfs(graph.adjacency(), exec);
  diameter_ = 0;
  spheres_.resize(n_);
  for (Index v = 0; v < n_; ++v) {
    Index ecc = 0;
    for (Index w = 0; w < n_; ++w) ecc = std::max<Index>(ecc, dist_[v * n_ + w]);
    diameter_ = std::max(diameter_, ecc);
    spheres_[v].resize(ecc + 1);
    for (Index w = 0; w < n_; ++w) spheres_[v][dist_[v * n_ + w]].push_back(w);
  }
  index_size_ = spheres_[base_].size();
}

const std::vector<Index>& SphereTable::sphere(Index v, Index r) const {
  const auto& s = spheres_.at(v);
  return r < s.size() ? s[r] : empty_;
}

std::vector<Index> SphereTable::index_set() const {
  std::vector<Index> out(index_size_);
  for (Index i = 0; i < index_size_; ++i) out[i] = i;
  return out;
}

SphereTable build_spheres(const PointedGraph& graph) { return SphereTable(graph); }

GraphSpec GraphSpec::parse(const std::string& text) {
  static const std::regex re(R"(\s*([a-z_\-]+)\s*\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) {
    throw Error(ErrorCode::InvalidArgument, "cannot parse graph spec '" + text + "'");
  }
  std::string name = m[1].str();
  std::replace(name.begin(), name.end(), '-', '_');
  const Index a = std::stoul(m[2].str());
  const bool two = m[3].matched;
  const Index b = two ? std::stoul(m[3].str()) : 0;
  static const std::map<std::string, GraphKind> kinds{
      {"cycle", GraphKind::Cycle},           {"complete", GraphKind::Complete},
      {"hypercube", GraphKind::Hypercube},   {"path", GraphKind::Path},
      {"line_window", GraphKind::LineWindow}, {"free_ball", GraphKind::FreeBall}};
  const auto it = kinds.find(name);
  if (it == kinds.end()) throw Error(ErrorCode::InvalidArgument, "unknown graph '" + name + "'");
  if ((it->second == GraphKind::FreeBall) != two) {
    throw Error(ErrorCode::InvalidArgument, "wrong number of parameters for '" + name + "'");
  }
  return {it->second, a, b};
}

namespace {

std::vector<std::string> numbered(Index n) {
  std::vector<std::string> out(n);
  for (Index v = 0; v < n; ++v) out[v] = std::to_string(v);
  return out;
}

PointedGraph free_ball(Index generators, Index radius) {
  if (generators == 0 || generators > 26) {
    throw Error(ErrorCode::InvalidArgument, "free_ball needs 1..26 generators");
  }
  if (radius == 0) throw Error(ErrorCode::InvalidArgument, "free_ball radius must be positive");
  // Letter 2g is a_g, 2g+1 its inverse; labels use lower/upper case.
  const Index letters = 2 * generators;
  auto glyph = [](Index letter) {
    const char base = static_cast<char>('a' + letter / 2);
    return letter % 2 == 0 ? base : static_cast<char>(base - 'a' + 'A');
  };
  std::vector<std::string> labels{"e"};
  std::vector<Index> last_letter{letters};  // sentinel for the identity
  std::vector<Edge> edges;
  std::vector<Index> frontier{0};
  for (Index depth = 1; depth <= radius; ++depth) {
    std::vector<Index> next;
    for (Index v : frontier) {
      for (Index s = 0; s < letters; ++s) {
        if (last_letter[v] != letters && (last_letter[v] ^ 1U) == s) continue;
        const Index w = labels.size();
        labels.push_back((v == 0 ? std::string() : labels[v]) + glyph(s));
        last_letter.push_back(s);
        edges.emplace_back(v, w);
        next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  return PointedGraph(std::move(labels), std::move(edges), 0, radius);
}

}  // namespace

PointedGraph generate_graph(const GraphSpec& spec) {
  const Index a = spec.a;
  std::vector<Edge> edges;
  switch (spec.kind) {
    case GraphKind::Cycle:
      if (a < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs n >= 3");
      for (Index v = 0; v < a; ++v) edges.emplace_back(v, (v + 1) % a);
      return PointedGraph(numbered(a), std::move(edges), 0);
    case GraphKind::Complete:
      if (a < 2) throw Error(ErrorCode::InvalidArgument, "complete needs n >= 2");
      for (Index v = 0; v < a; ++v) {
        for (Index w = v + 1; w < a; ++w) edges.emplace_back(v, w);
      }
      return PointedGraph(numbered(a), std::move(edges), 0);
    case GraphKind::Hypercube: {
      if (a < 1 || a > 20) throw Error(ErrorCode::InvalidArgument, "hypercube needs 1 <= d <= 20");
      const Index n = Index{1} << a;
      for (Index v = 0; v < n; ++v) {
        for (Index bit = 0; bit < a; ++bit) {
          const Index w = v ^ (Index{1} << bit);
          if (v < w) edges.emplace_back(v, w);
        }
      }
      return PointedGraph(numbered(n), std::move(edges), 0);
    }
    case GraphKind::Path:
      if (a < 2) throw Error(ErrorCode::InvalidArgument, "path needs n >= 2");
      for (Index v = 0; v + 1 < a; ++v) edges.emplace_back(v, v + 1);
      return PointedGraph(numbered(a), std::move(edges), 0);
    case GraphKind::LineWindow: {
      if (a < 1) throw Error(ErrorCode::InvalidArgument, "line_window needs R >= 1");
      std::vector<std::string> labels;
      const long long r = static_cast<long long>(a);
      for (long long x = -r; x <= r; ++x) labels.push_back(std::to_string(x));
      for (Index v = 0; v + 1 < labels.size(); ++v) edges.emplace_back(v, v + 1);
      return PointedGraph(std::move(labels), std::move(edges), a, a);
    }
    case GraphKind::FreeBall:
      return free_ball(a, spec.b);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown graph kind");
}

}  // namespace hyperwalk
