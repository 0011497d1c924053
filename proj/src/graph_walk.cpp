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

#include "hyperwalk/graph_walk.hpp"

#include "hyperwalk/kernels/graph.hpp"

namespace hyperwalk {

ExactTensor wildberger_tensor(const PointedGraph& graph, const SphereTable& spheres) {
  const Index m = spheres.index_size();
  const Index base = graph.base();
  const auto boundary = graph.boundary_radius();
  TensorBuilder<Rational> builder(m);
  builder.allow_undefined_rows(boundary.has_value());
  for (Index i = 0; i < m; ++i) {
    const auto& outer = spheres.sphere(base, i);
    for (Index j = 0; j < m; ++j) {
      if (boundary && i + j > *boundary) continue;
      // Counts are integers; collect numerators over a common denominator per v.
      std::vector<Rational> row(m, Rational(0));
      for (Index v : outer) {
        const auto& inner = spheres.sphere(v, j);
        if (inner.empty()) {
          throw Error(ErrorCode::EmptySphere,
                      "S_" + std::to_string(j) + "(" + graph.labels()[v] + ") is empty", v);
        }
        std::vector<long long> hits(m, 0);
        for (Index w : inner) ++hits[spheres.distance(w, base)];
        const Rational scale(1, static_cast<long long>(inner.size() * outer.size()));
        for (Index k = 0; k < m; ++k) {
          if (hits[k]) row[k] += Rational(hits[k]) * scale;
        }
      }
      builder.touch(i, j);
      for (Index k = 0; k < m; ++k) {
        if (row[k] != 0) builder.add(i, j, k, row[k]);
      }
    }
  }
  return builder.build();
}

ExactTensor wildberger_tensor(const PointedGraph& graph) {
  return wildberger_tensor(graph, SphereTable(graph));
}

GraphCheck check_condition_S(const PointedGraph& graph, const SphereTable& spheres) {
  const Index n = graph.vertex_count();
  const Index m = spheres.index_size();
  const Index base = graph.base();
  GraphCheck out;

  for (Index i = 0; i < m; ++i) {
    const Index ref = spheres.sphere(0, i).size();
    for (Index v = 1; v < n; ++v) {
      if (spheres.sphere(v, i).size() != ref) {
        out.holds = false;
        out.witness = {i, 0, v};
        out.detail = "|S_" + std::to_string(i) + "| is " + std::to_string(ref) + " at '" +
                     graph.labels()[0] + "' but " + std::to_string(spheres.sphere(v, i).size()) +
                     " at '" + graph.labels()[v] + "'";
        return out;
      }
    }
  }

  // counts[v][i * m + j] = |S_i(v) n S_j(v0)|
  std::vector<std::vector<Index>> counts(n, std::vector<Index>(m * m, 0));
  for (Index v = 0; v < n; ++v) {
    for (Index w = 0; w < n; ++w) {
      const Index i = spheres.distance(v, w);
      if (i < m) ++counts[v][i * m + spheres.distance(w, base)];
    }
  }
  for (Index i = 0; i < m; ++i) {
    for (Index j = 0; j < m; ++j) {
      for (Index k = 0; k < m; ++k) {
        const auto& shell = spheres.sphere(base, k);
        for (Index v : shell) {
          if (counts[v][i * m + j] == counts[shell.front()][i * m + j]) continue;
          out.holds = false;
          out.witness = {i, j, k, shell.front(), v};
          out.detail = "|S_" + std::to_string(i) + "(.) n S_" + std::to_string(j) +
                       "(v0)| differs on S_" + std::to_string(k) + "(v0) between '" +
                       graph.labels()[shell.front()] + "' and '" + graph.labels()[v] + "'";
          return out;
        }
      }
    }
  }
  return out;
}

GraphCheck check_distance_regular(const PointedGraph& graph, const SphereTable& spheres,
                                  kernels::Exec exec) {
  GraphCheck out;
  const auto conflict = kernels::distance_regular_scan(spheres.distances(), graph.vertex_count(),
                                                       spheres.diameter(), exec);
  if (conflict) {
    const auto& c = *conflict;
    const auto& l = graph.labels();
    out.holds = false;
    out.witness = {c.u, c.v, c.reference_u, c.reference_v, c.i, c.j};
    out.detail = "|S_" + std::to_string(c.i) + "(u) n S_" + std::to_string(c.j) +
                 "(v)| differs between (" + l[c.u] + "," + l[c.v] + ") and (" +
                 l[c.reference_u] + "," + l[c.reference_v] + ")";
  }
  return out;
}

GraphCheck check_sphere_assumption(const PointedGraph& graph, const SphereTable& spheres) {
  GraphCheck out;
  for (Index v = 0; v < graph.vertex_count(); ++v) {
    for (Index r = 0; r < spheres.index_size(); ++r) {
      if (!spheres.sphere(v, r).empty()) continue;
      out.holds = false;
      out.witness = {v, r};
      out.detail = "S_" + std::to_string(r) + "(" + graph.labels()[v] + ") is empty";
      return out;
    }
  }
  return out;
}

TransitionMatrixFamily transition_family(const StructureTensor& tensor) {
  const Index n = tensor.size();
  TransitionMatrixFamily family(n, Eigen::MatrixXd::Zero(n, n));
  for (Index k = 0; k < n; ++k) {
    for (Index i = 0; i < n; ++i) {
      for (const auto& t : tensor.row(k, i)) family[k](i, t.k) = t.value;
    }
  }
  return family;
}

}  // namespace hyperwalk
