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

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; inputs are converted to plain dense arrays first.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "hyperwalk/graph.hpp"
#include "hyperwalk/oqrw.hpp"
#include "hyperwalk/rational.hpp"
#include "hyperwalk/structure_tensor.hpp"

namespace oracle {

using hyperwalk::Index;
using hyperwalk::Rational;
using Dense3 = std::vector<std::vector<std::vector<double>>>;  // q[i][j][k]

inline Dense3 dense(const hyperwalk::StructureTensor& t) {
  const Index n = t.size();
  Dense3 q(n, std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)));
  for (const auto& e : t.entries()) q[e.i][e.j][e.k] = e.value;
  return q;
}

/// Left fold written as repeated vector-times-tensor products.
inline std::vector<double> fold(const Dense3& q, const std::vector<Index>& word) {
  const Index n = q.size();
  std::vector<double> v(n, 0.0);
  v[word[0]] = 1.0;
  for (std::size_t s = 1; s < word.size(); ++s) {
    std::vector<double> w(n, 0.0);
    for (Index a = 0; a < n; ++a)
      for (Index c = 0; c < n; ++c) w[c] += v[a] * q[a][word[s]][c];
    v = w;
  }
  return v;
}

/// Full expansion of a left-nested product by enumerating every chain of
/// intermediate indices (exponential; for short words only).
inline std::vector<double> expand(const Dense3& q, const std::vector<Index>& word) {
  const Index n = q.size();
  std::vector<double> out(n, 0.0);
  if (word.size() == 1) {
    out[word[0]] = 1.0;
    return out;
  }
  std::vector<Index> chain(word.size() - 1, 0);
  while (true) {
    double w = 1.0;
    Index cur = word[0];
    for (std::size_t s = 0; s < chain.size() && w != 0.0; ++s) {
      w *= q[cur][word[s + 1]][chain[s]];
      cur = chain[s];
    }
    if (w != 0.0) out[cur] += w;
    std::size_t p = chain.size();
    while (p > 0) {
      --p;
      if (++chain[p] < n) break;
      chain[p] = 0;
      if (p == 0) return out;
    }
  }
}

/// First (lexicographic) quadruple violating associativity, and the max residual.
struct AssocResult {
  double max_residual = 0.0;
  std::optional<std::array<Index, 4>> first;
};

inline AssocResult associativity(const Dense3& q, double tol) {
  AssocResult r;
  const Index n = q.size();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k)
        for (Index l = 0; l < n; ++l) {
          double left = 0.0, right = 0.0;
          for (Index m = 0; m < n; ++m) {
            left += q[i][j][m] * q[m][k][l];
            right += q[j][k][m] * q[i][m][l];
          }
          const double res = std::abs(left - right);
          r.max_residual = std::max(r.max_residual, res);
          if (res > tol && !r.first) r.first = std::array<Index, 4>{i, j, k, l};
        }
  return r;
}

/// Floyd-Warshall distances (independent of the library's BFS).
inline std::vector<std::vector<Index>> distances(const hyperwalk::PointedGraph& g) {
  const Index n = g.vertex_count();
  const Index inf = std::numeric_limits<Index>::max() / 4;
  std::vector<std::vector<Index>> d(n, std::vector<Index>(n, inf));
  for (Index v = 0; v < n; ++v) d[v][v] = 0;
  for (const auto& [a, b] : g.edges()) d[a][b] = d[b][a] = 1;
  for (Index m = 0; m < n; ++m)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) d[a][b] = std::min(d[a][b], d[a][m] + d[m][b]);
  return d;
}

/// Wildberger constants straight from the defining ratio of sphere counts.
/// Entry [i][j] is empty when a needed sphere is empty.
inline std::vector<std::vector<std::vector<Rational>>> wildberger(const hyperwalk::PointedGraph& g) {
  const auto d = distances(g);
  const Index n = g.vertex_count(), v0 = g.base();
  Index m = 0;
  for (Index v = 0; v < n; ++v) m = std::max(m, d[v][v0] + 1);
  std::vector<std::vector<std::vector<Rational>>> p(
      m, std::vector<std::vector<Rational>>(m, std::vector<Rational>(m, Rational(0))));
  for (Index i = 0; i < m; ++i) {
    std::vector<Index> si;
    for (Index v = 0; v < n; ++v)
      if (d[v0][v] == i) si.push_back(v);
    for (Index j = 0; j < m; ++j) {
      for (Index v : si) {
        long long sj = 0;
        std::vector<long long> hit(m, 0);
        for (Index w = 0; w < n; ++w)
          if (d[v][w] == j) {
            ++sj;
            ++hit[d[w][v0]];
          }
        if (sj == 0) continue;
        for (Index k = 0; k < m; ++k)
          p[i][j][k] += Rational(hit[k], sj) / Rational(static_cast<long long>(si.size()));
      }
    }
  }
  return p;
}

/// Path sums as a product of vertex-level jump matrices W_k(v, w) = 1/|S_k(v)|.
inline std::vector<double> path_sums(const hyperwalk::PointedGraph& g, const std::vector<Index>& word) {
  const auto d = distances(g);
  const Index n = g.vertex_count(), v0 = g.base();
  Eigen::RowVectorXd mass = Eigen::RowVectorXd::Zero(n);
  mass(v0) = 1.0;
  for (Index k : word) {
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, n);
    for (Index v = 0; v < n; ++v) {
      double size = 0;
      for (Index u = 0; u < n; ++u) size += d[v][u] == k;
      for (Index u = 0; u < n; ++u)
        if (d[v][u] == k) w(v, u) = 1.0 / size;
    }
    mass = mass * w;
  }
  Index m = 0;
  for (Index v = 0; v < n; ++v) m = std::max(m, d[v][v0] + 1);
  std::vector<double> out(m, 0.0);
  for (Index v = 0; v < n; ++v) out[d[v][v0]] += mass(v);
  return out;
}

// ---------------------------------------------------------------------------
// Quantum side: full density matrices on H (x) K, index a * d + i.

using CMatrix = Eigen::MatrixXcd;

inline CMatrix block_or_zero(const hyperwalk::KrausFamily& f, Index i, Index j, Index k) {
  const auto all = f.blocks();
  const auto it = all.find({i, j, k});
  return it == all.end() ? CMatrix::Zero(f.h_dim(), f.h_dim()) : it->second;
}

inline CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

/// M_{i,j;k} = B_{i,j;k} (x) |i><j| as an (h d) x (h d) matrix.
inline CMatrix lifted(const CMatrix& b, Index i, Index j, Index d) {
  CMatrix unit = CMatrix::Zero(d, d);
  unit(i, j) = 1.0;
  return kron(b, unit);
}

inline CMatrix full_state(const hyperwalk::BlockState& s) {
  const Index d = s.d_size(), h = s.h_dim();
  CMatrix rho = CMatrix::Zero(h * d, h * d);
  for (Index i = 0; i < d; ++i) {
    CMatrix unit = CMatrix::Zero(d, d);
    unit(i, i) = 1.0;
    rho += kron(s.blocks()[i], unit);
  }
  return rho;
}

inline CMatrix apply(const hyperwalk::KrausFamily& f, Index k, const CMatrix& rho) {
  const Index d = f.d_size();
  CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
  for (const auto& [key, b] : f.blocks()) {
    if (key.k != k) continue;
    const CMatrix m = lifted(b, key.i, key.j, d);
    out += m * rho * m.adjoint();
  }
  return out;
}

inline std::vector<double> measure(const CMatrix& rho, Index h, Index d) {
  std::vector<double> p(d, 0.0);
  for (Index a = 0; a < h; ++a)
    for (Index i = 0; i < d; ++i) p[i] += rho(a * d + i, a * d + i).real();
  return p;
}

inline std::vector<double> walk(const hyperwalk::KrausFamily& f, const std::vector<Index>& word,
                                const hyperwalk::BlockState& s) {
  CMatrix rho = full_state(s);
  for (Index k : word) rho = apply(f, k, rho);
  return measure(rho, f.h_dim(), f.d_size());
}

/// Max-norm residual of the (HB) operator identity over all tuples.
inline double hb_residual(const hyperwalk::KrausFamily& f, const Dense3& q) {
  const Index d = f.d_size();
  double worst = 0.0;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      for (Index k = 0; k < d; ++k)
        for (Index l = 0; l < d; ++l) {
          CMatrix lhs = CMatrix::Zero(f.h_dim(), f.h_dim()), rhs = lhs;
          for (Index m = 0; m < d; ++m) {
            const CMatrix a = block_or_zero(f, m, j, l), b = block_or_zero(f, i, m, k);
            lhs += a.adjoint() * b.adjoint() * b * a;
            const CMatrix c = block_or_zero(f, i, j, m);
            rhs += q[k][l][m] * c.adjoint() * c;
          }
          worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        }
  return worst;
}

}  // namespace oracle
