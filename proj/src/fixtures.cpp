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

#include "hyperwalk/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hyperwalk/graph.hpp"
#include "hyperwalk/graph_walk.hpp"

namespace hyperwalk::fixtures {

namespace {

Permutation identity_permutation(Index n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), Index{0});
  return p;
}

CMatrix identity2() { return CMatrix::Identity(2, 2); }

}  // namespace

Hypergroup c4() {
  return Hypergroup(wildberger_tensor(generate_graph(GraphSpec::cycle(4))).to_double(),
                    identity_permutation(3));
}

Hypergroup z_window(Index radius) {
  return Hypergroup(
      wildberger_tensor(generate_graph(GraphSpec::line_window(radius))).to_double(),
      identity_permutation(radius + 1));
}

GroupTable cyclic_group_table(Index n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "group order must be positive");
  GroupTable g;
  g.multiplication.assign(n, std::vector<Index>(n));
  g.inverse.resize(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) g.multiplication[a][b] = (a + b) % n;
    g.inverse[a] = (n - a) % n;
  }
  return g;
}

GroupTable s3_table() {
  std::vector<std::array<Index, 3>> perms;
  std::array<Index, 3> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));

  const auto index_of = [&](const std::array<Index, 3>& q) {
    return static_cast<Index>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  GroupTable g;
  g.multiplication.assign(6, std::vector<Index>(6));
  g.inverse.resize(6);
  for (Index a = 0; a < 6; ++a) {
    std::array<Index, 3> inv{};
    for (Index x = 0; x < 3; ++x) inv[perms[a][x]] = x;
    g.inverse[a] = index_of(inv);
    for (Index b = 0; b < 6; ++b) {
      std::array<Index, 3> ab{};
      for (Index x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      g.multiplication[a][b] = index_of(ab);
    }
  }
  return g;
}

Hypergroup cyclic_group(Index n) {
  const auto g = cyclic_group_table(n);
  return hypergroup_from_group(g.multiplication, g.inverse);
}

Hypergroup s3_group() {
  const auto g = s3_table();
  return hypergroup_from_group(g.multiplication, g.inverse);
}

Hypergroup class_hypergroup(const GroupTable& group) {
  const Index n = group.multiplication.size();
  const auto& mul = group.multiplication;
  std::vector<Index> class_of(n, n);
  std::vector<std::vector<Index>> classes;
  for (Index g = 0; g < n; ++g) {
    if (class_of[g] != n) continue;
    std::set<Index> members;
    for (Index h = 0; h < n; ++h) members.insert(mul[mul[h][g]][group.inverse[h]]);
    for (Index m : members) class_of[m] = classes.size();
    classes.emplace_back(members.begin(), members.end());
  }
  const Index c = classes.size();
  TensorBuilder<double> builder(c);
  for (Index a = 0; a < c; ++a) {
    for (Index b = 0; b < c; ++b) {
      std::vector<Index> hits(c, 0);
      for (Index x : classes[a]) {
        for (Index y : classes[b]) ++hits[class_of[mul[x][y]]];
      }
      const double total = static_cast<double>(classes[a].size() * classes[b].size());
      for (Index k = 0; k < c; ++k) {
        if (hits[k]) builder.add(a, b, k, static_cast<double>(hits[k]) / total);
      }
    }
  }
  Permutation sigma(c);
  for (Index a = 0; a < c; ++a) sigma[a] = class_of[group.inverse[classes[a].front()]];
  return Hypergroup(builder.build(), sigma);
}

Hypergroup s3_classes() { return class_hypergroup(s3_table()); }

StructureTensor lo2() {
  TensorBuilder<double> b(2);
  for (Index j = 0; j < 2; ++j) {
    b.add(0, j, 0, 1.0);
    b.add(1, j, 1, 1.0);
  }
  return b.build();
}

StructureTensor perturbed_c4() {
  TensorBuilder<double> b(3);
  for (Index i = 0; i < 3; ++i) {
    b.add(0, i, i, 1.0);
    if (i) b.add(i, 0, i, 1.0);
  }
  b.add(1, 1, 0, 0.6).add(1, 1, 2, 0.4);
  b.add(1, 2, 1, 1.0).add(2, 1, 1, 1.0).add(2, 2, 0, 1.0);
  return b.build();
}

CMatrix three_point_b() {
  CMatrix m(2, 2);
  m << 1.0, 1.0, 0.0, 1.0;
  return m / std::sqrt(3.0);
}

CMatrix three_point_c() {
  CMatrix m(2, 2);
  m << 1.0, 0.0, -1.0, 1.0;
  return m / std::sqrt(3.0);
}

KrausFamily three_point_family() {
  std::map<BlockKey, CMatrix> blocks;
  for (Index k = 0; k < 3; ++k) blocks[{k, 0, k}] = identity2();
  for (Index j = 1; j < 3; ++j) blocks[{j, j, 0}] = identity2();
  blocks[{0, 1, 1}] = three_point_b();
  blocks[{2, 1, 1}] = three_point_c();
  blocks[{1, 2, 1}] = identity2();
  blocks[{1, 1, 2}] = identity2();
  blocks[{0, 2, 2}] = identity2();
  return KrausFamily(3, 2, blocks);
}

BlockState three_point_state(double x) {
  if (x < 0.0 || x > 1.0) throw Error(ErrorCode::InvalidArgument, "x must lie in [0, 1]");
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = x;
  rho(1, 1) = 1.0 - x;
  return BlockState::concentrated(rho, 0, 3);
}

KrausFamily lattice_family(Index radius, double x) {
  if (radius == 0) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
  if (x < 0.0 || x > 1.0) throw Error(ErrorCode::InvalidArgument, "x must lie in [0, 1]");
  const Index d = radius + 1;
  CMatrix b = CMatrix::Zero(2, 2), c = CMatrix::Zero(2, 2);
  b(0, 0) = std::sqrt(x);
  b(1, 1) = std::sqrt(1.0 - x);
  c(0, 0) = std::sqrt(1.0 - x);
  c(1, 1) = std::sqrt(x);
  std::map<BlockKey, CMatrix> blocks;
  std::set<Slot> undefined;
  for (Index k = 0; k < d; ++k) blocks[{k, 0, k}] = identity2();
  for (Index j = 1; j < d; ++j) blocks[{j, j, 0}] = identity2();
  for (Index j = 1; j < d; ++j) {
    for (Index k = 1; k < d; ++k) {
      if (j + k > radius) {
        undefined.insert({j, k});
        continue;
      }
      blocks[{j + k, j, k}] = b;
      blocks[{j > k ? j - k : k - j, j, k}] = c;
    }
  }
  return KrausFamily(d, 2, blocks, undefined);
}

BlockState lattice_state(Index radius) {
  return BlockState::concentrated(identity2() / 2.0, 0, radius + 1);
}

CMatrix commuting_a0() {
  const double s3 = std::sqrt(3.0), s2 = std::sqrt(2.0);
  CMatrix m(2, 2);
  m << s3 + s2, s3 - s2, s3 - s2, s3 + s2;
  return m / (2.0 * std::sqrt(6.0));
}

CMatrix commuting_a1() {
  const double s3 = std::sqrt(3.0);
  CMatrix m(2, 2);
  m << 2.0 + s3, -2.0 + s3, -2.0 + s3, 2.0 + s3;
  return m / (2.0 * std::sqrt(6.0));
}

KrausFamily stationary_family() {
  std::map<BlockKey, CMatrix> blocks;
  for (Index j = 0; j < 2; ++j) {
    for (Index k = 0; k < 2; ++k) {
      blocks[{0, j, k}] = commuting_a0();
      blocks[{1, j, k}] = commuting_a1();
    }
  }
  return KrausFamily(2, 2, blocks);
}

KrausFamily left_zero_family() {
  std::map<BlockKey, CMatrix> blocks;
  for (Index j = 0; j < 2; ++j) {
    blocks[{0, j, 0}] = commuting_a0();
    blocks[{1, j, 0}] = commuting_a1();
    blocks[{0, j, 1}] = identity2() / std::sqrt(2.0);
    blocks[{1, j, 1}] = identity2() / std::sqrt(2.0);
  }
  return KrausFamily(2, 2, blocks);
}

BlockState half_identity_state() { return BlockState::concentrated(identity2() / 2.0, 0, 2); }

}  // namespace hyperwalk::fixtures
