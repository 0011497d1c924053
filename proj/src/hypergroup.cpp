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

#include "hyperwalk/hypergroup.hpp"

#include <algorithm>
#include <cmath>

#include "hyperwalk/kernels/algebra.hpp"

namespace hyperwalk {

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Stochasticity: return "stochasticity";
    case Axiom::Unit: return "unit";
    case Axiom::Involution: return "involution";
    case Axiom::Associativity: return "associativity";
    case Axiom::StarLaw: return "star_law";
    case Axiom::ZeroSupport: return "zero_support";
  }
  return "unknown";
}

bool ValidationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const AxiomCheck& c) { return c.pass; });
}

const AxiomCheck& ValidationReport::check(Axiom a) const {
  for (const auto& c : checks) {
    if (c.axiom == a) return c;
  }
  throw Error(ErrorCode::InvalidArgument, std::string("no check for ") + to_string(a));
}

bool is_permutation(const Permutation& p, Index n) {
  if (p.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Index v : p) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

namespace {

// Records a residual; the witness is the first tuple (in scan order) that
// breaks the tolerance.
void note(AxiomCheck& c, double residual, double eps, std::vector<Index> tuple) {
  ++c.checked;
  c.worst_residual = std::max(c.worst_residual, residual);
  if (residual > eps && c.pass) {
    c.pass = false;
    c.witness = std::move(tuple);
  }
}

AxiomCheck check_stochasticity(const StructureTensor& t) {
  AxiomCheck c;
  c.axiom = Axiom::Stochasticity;
  const Index n = t.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!t.defined(i, j)) continue;
      double sum = 0.0;
      double negative = 0.0;
      for (const auto& term : t.row(i, j)) {
        sum += term.value;
        negative = std::max(negative, -term.value);
      }
      note(c, std::max(std::abs(sum - 1.0), negative), tol::prob, {i, j});
    }
  }
  return c;
}

AxiomCheck check_unit(const StructureTensor& t) {
  AxiomCheck c;
  c.axiom = Axiom::Unit;
  const Index n = t.size();
  for (Index a = 0; a < n; ++a) {
    for (int side = 0; side < 2; ++side) {
      const Index i = side == 0 ? 0 : a;
      const Index j = side == 0 ? a : 0;
      if (!t.defined(i, j)) continue;
      const auto row = t.dense_row(i, j);
      for (Index k = 0; k < n; ++k) {
        note(c, std::abs(row[k] - (k == a ? 1.0 : 0.0)), tol::prob, {i, j, k});
      }
    }
  }
  return c;
}

AxiomCheck check_involution(const Permutation& sigma) {
  AxiomCheck c;
  c.axiom = Axiom::Involution;
  for (Index i = 0; i < sigma.size(); ++i) {
    note(c, sigma[sigma[i]] == i ? 0.0 : 1.0, 0.0, {i});
  }
  if (!sigma.empty()) note(c, sigma[0] == 0 ? 0.0 : 1.0, 0.0, {0});
  return c;
}

AxiomCheck check_star(const StructureTensor& t, const Permutation& sigma) {
  AxiomCheck c;
  c.axiom = Axiom::StarLaw;
  const Index n = t.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!t.defined(i, j) || !t.defined(sigma[j], sigma[i])) continue;
      const auto lhs = t.dense_row(i, j);
      const auto rhs = t.dense_row(sigma[j], sigma[i]);
      for (Index k = 0; k < n; ++k) note(c, std::abs(lhs[k] - rhs[sigma[k]]), tol::prob, {i, j, k});
    }
  }
  return c;
}

// Q_{i,j}^0 > eps iff j = sigma(i). A missing unit term counts as residual 1.
AxiomCheck check_zero_support(const StructureTensor& t, const Permutation& sigma) {
  AxiomCheck c;
  c.axiom = Axiom::ZeroSupport;
  const Index n = t.size();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (!t.defined(i, j)) continue;
      const double q0 = t.at(i, j, 0);
      if (j == sigma[i]) {
        ++c.checked;
        if (q0 <= tol::prob) {
          c.worst_residual = std::max(c.worst_residual, 1.0);
          if (c.pass) {
            c.pass = false;
            c.witness = std::vector<Index>{i, j};
          }
        }
      } else {
        note(c, q0, tol::prob, {i, j});
      }
    }
  }
  return c;
}

}  // namespace

ValidationReport validate_hypergroup(const StructureTensor& tensor, const Permutation& involution,
                                     kernels::Exec exec) {
  if (involution.size() != tensor.size()) {
    throw Error(ErrorCode::SizeMismatch, "involution has " + std::to_string(involution.size()) +
                                             " entries, tensor size " +
                                             std::to_string(tensor.size()));
  }
  if (!is_permutation(involution, tensor.size())) {
    throw Error(ErrorCode::InvalidArgument, "involution is not a permutation");
  }
  ValidationReport report;
  report.checks.push_back(check_stochasticity(tensor));
  report.checks.push_back(check_unit(tensor));
  report.checks.push_back(check_involution(involution));

  const auto scan = kernels::associativity_scan(tensor, tol::assoc, exec);
  AxiomCheck assoc;
  assoc.axiom = Axiom::Associativity;
  assoc.checked = scan.checked;
  assoc.worst_residual = scan.max_residual;
  assoc.pass = scan.pass();
  if (scan.first_violation) {
    assoc.witness = std::vector<Index>(scan.first_violation->begin(), scan.first_violation->end());
  }
  report.checks.push_back(assoc);

  report.checks.push_back(check_star(tensor, involution));
  report.checks.push_back(check_zero_support(tensor, involution));

  report.hermitian = true;
  for (Index i = 0; i < involution.size(); ++i) report.hermitian &= involution[i] == i;
  return report;
}

Hypergroup::Hypergroup(StructureTensor tensor, Permutation involution)
    : tensor_(std::move(tensor)), involution_(std::move(involution)) {
  const auto report = validate_hypergroup(tensor_, involution_);
  if (!report.pass()) {
    std::string failed;
    for (const auto& c : report.checks) {
      if (c.pass) continue;
      if (!failed.empty()) failed += ", ";
      failed += to_string(c.axiom);
      if (c.witness) failed += " at " + format_tuple(*c.witness);
      failed += " (residual " + std::to_string(c.worst_residual) + ")";
    }
    throw Error(ErrorCode::InvalidHypergroup, failed);
  }
}

bool Hypergroup::hermitian() const {
  for (Index i = 0; i < involution_.size(); ++i) {
    if (involution_[i] != i) return false;
  }
  return true;
}

std::vector<std::optional<Index>> derive_partial_involution(const StructureTensor& tensor) {
  const Index n = tensor.size();
  std::vector<std::optional<Index>> sigma(n);
  for (Index i = 0; i < n; ++i) {
    std::optional<Index> found;
    bool undecided = false;
    for (Index j = 0; j < n; ++j) {
      if (!tensor.defined(i, j)) {
        undecided = true;
        continue;
      }
      if (tensor.at(i, j, 0) > tol::prob) {
        if (found) {
          throw Error(ErrorCode::Ambiguous,
                      "x_0 appears in x_" + std::to_string(i) + " o x_" + std::to_string(*found) +
                          " and x_" + std::to_string(i) + " o x_" + std::to_string(j),
                      i);
        }
        found = j;
      }
    }
    if (!found && !undecided) {
      throw Error(ErrorCode::NoCandidate, "no j with Q_{" + std::to_string(i) + ",j}^0 > 0", i);
    }
    sigma[i] = found;
  }
  // sigma(i) = j forces sigma(j) = i.
  for (Index i = 0; i < n; ++i) {
    if (!sigma[i]) continue;
    const Index j = *sigma[i];
    if (!sigma[j]) {
      sigma[j] = i;
    } else if (*sigma[j] != i) {
      throw Error(ErrorCode::NotInvolutive,
                  "sigma(" + std::to_string(i) + ")=" + std::to_string(j) + " but sigma(" +
                      std::to_string(j) + ")=" + std::to_string(*sigma[j]),
                  i);
    }
  }
  return sigma;
}

Permutation derive_involution(const StructureTensor& tensor) {
  const auto partial = derive_partial_involution(tensor);
  Permutation sigma(partial.size());
  for (Index i = 0; i < partial.size(); ++i) {
    if (!partial[i]) {
      throw Error(ErrorCode::TruncationExceeded,
                  "sigma(" + std::to_string(i) + ") depends on rows beyond the truncation", i);
    }
    sigma[i] = *partial[i];
  }
  return sigma;
}

Hypergroup hypergroup_from_group(const std::vector<std::vector<Index>>& table,
                                 const std::vector<Index>& inverse) {
  const Index n = table.size();
  if (n == 0) throw Error(ErrorCode::NotAGroup, "empty table");
  if (inverse.size() != n) throw Error(ErrorCode::NotAGroup, "inverse table has wrong length");
  for (const auto& row : table) {
    if (row.size() != n) throw Error(ErrorCode::NotAGroup, "table is not square");
    for (Index v : row) {
      if (v >= n) throw Error(ErrorCode::NotAGroup, "product out of range");
    }
  }
  for (Index a = 0; a < n; ++a) {
    if (table[0][a] != a || table[a][0] != a) {
      throw Error(ErrorCode::NotAGroup, "index 0 is not the identity", a);
    }
    if (inverse[a] >= n || table[a][inverse[a]] != 0 || table[inverse[a]][a] != 0) {
      throw Error(ErrorCode::NotAGroup, "bad inverse for " + std::to_string(a), a);
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw Error(ErrorCode::NotAGroup, "not associative at " + format_tuple({a, b, c}));
        }
      }
    }
  }
  TensorBuilder<double> builder(n);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) builder.add(a, b, table[a][b], 1.0);
  }
  return Hypergroup(builder.build(), inverse);
}

bool check_isomorphism(const Hypergroup& h1, const Hypergroup& h2, const Permutation& phi) {
  const Index n = h1.size();
  if (h2.size() != n) {
    throw Error(ErrorCode::SizeMismatch,
                "sizes " + std::to_string(n) + " and " + std::to_string(h2.size()));
  }
  if (phi.size() != n) throw Error(ErrorCode::SizeMismatch, "map has wrong length");
  if (!is_permutation(phi, n)) return false;
  if (phi[0] != 0) return false;
  const auto& s1 = h1.involution();
  const auto& s2 = h2.involution();
  for (Index i = 0; i < n; ++i) {
    if (phi[s1[i]] != s2[phi[i]]) return false;
  }
  const auto& t1 = h1.tensor();
  const auto& t2 = h2.tensor();
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (t1.defined(i, j) != t2.defined(phi[i], phi[j])) return false;
      if (!t1.defined(i, j)) continue;
      const auto a = t1.dense_row(i, j);
      const auto b = t2.dense_row(phi[i], phi[j]);
      for (Index k = 0; k < n; ++k) {
        if (std::abs(a[k] - b[phi[k]]) > tol::prob) return false;
      }
    }
  }
  return true;
}

}  // namespace hyperwalk
