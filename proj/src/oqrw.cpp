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

#include "hyperwalk/oqrw.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hyperwalk/hypergroup.hpp"
#include "hyperwalk/kernels/oqrw.hpp"

namespace hyperwalk {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

// ---------------------------------------------------------------------------
// KrausFamily

KrausFamily::KrausFamily(Index d_size, Index h_dim, const std::map<BlockKey, CMatrix>& blocks,
                         const std::set<Slot>& undefined_slots)
    : d_size_(d_size), h_dim_(h_dim), slots_(d_size * d_size) {
  if (d_size == 0 || h_dim == 0) {
    throw Error(ErrorCode::DimensionMismatch, "d_size and h_dim must be positive");
  }
  for (Index p = 0; p < slots_.size(); ++p) slots_[p].emplace();
  for (const auto& [j, k] : undefined_slots) {
    if (j >= d_size || k >= d_size) throw Error(ErrorCode::IndexOutOfRange, "undefined slot");
    slots_[j * d_size + k].reset();
    truncated_ = true;
  }
  for (const auto& [key, m] : blocks) {
    if (key.i >= d_size || key.j >= d_size || key.k >= d_size) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "block " + format_tuple({key.i, key.j, key.k}) + " outside D");
    }
    if (static_cast<Index>(m.rows()) != h_dim || static_cast<Index>(m.cols()) != h_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "block " + format_tuple({key.i, key.j, key.k}) + " is " +
                      std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (max_abs(m) == 0.0) continue;
    auto& slot = slots_[key.j * d_size + key.k];
    if (!slot) {
      throw Error(ErrorCode::InvalidKraus,
                  "block " + format_tuple({key.i, key.j, key.k}) + " lies in an undefined slot");
    }
    slot->push_back({key.i, m});  // std::map iteration keeps i sorted within a slot
  }
}

bool KrausFamily::slot_defined(Index j, Index k) const {
  if (j >= d_size_ || k >= d_size_) throw Error(ErrorCode::IndexOutOfRange, "slot outside D");
  return slots_[j * d_size_ + k].has_value();
}

const std::vector<KrausFamily::Term>& KrausFamily::slot(Index j, Index k) const {
  if (!slot_defined(j, k)) {
    throw Error(ErrorCode::TruncationExceeded,
                "slot " + format_tuple({j, k}) + " lies beyond the truncation");
  }
  return *slots_[j * d_size_ + k];
}

const CMatrix* KrausFamily::block(Index i, Index j, Index k) const {
  if (!slot_defined(j, k)) return nullptr;
  for (const auto& t : *slots_[j * d_size_ + k]) {
    if (t.i == i) return &t.matrix;
  }
  return nullptr;
}

std::map<BlockKey, CMatrix> KrausFamily::blocks() const {
  std::map<BlockKey, CMatrix> out;
  for (Index j = 0; j < d_size_; ++j) {
    for (Index k = 0; k < d_size_; ++k) {
      const auto& s = slots_[j * d_size_ + k];
      if (!s) continue;
      for (const auto& t : *s) out.emplace(BlockKey{t.i, j, k}, t.matrix);
    }
  }
  return out;
}

std::set<Slot> KrausFamily::undefined_slots() const {
  std::set<Slot> out;
  for (Index p = 0; p < slots_.size(); ++p) {
    if (!slots_[p]) out.insert({p / d_size_, p % d_size_});
  }
  return out;
}

KrausReport validate_kraus(const KrausFamily& family) {
  KrausReport report;
  const Index d = family.d_size();
  const Index h = family.h_dim();
  const CMatrix identity = CMatrix::Identity(h, h);
  for (Index j = 0; j < d; ++j) {
    for (Index k = 0; k < d; ++k) {
      if (!family.slot_defined(j, k)) continue;
      CMatrix sum = CMatrix::Zero(h, h);
      for (const auto& t : family.slot(j, k)) sum += t.matrix.adjoint() * t.matrix;
      const double r = max_abs(sum - identity);
      report.residuals[{j, k}] = r;
      if (!report.worst_slot || r > report.max_residual) {
        report.max_residual = r;
        report.worst_slot = Slot{j, k};
      }
    }
  }
  report.pass = report.max_residual <= tol::kraus;
  return report;
}

// ---------------------------------------------------------------------------
// BlockState

BlockState BlockState::unchecked(std::vector<CMatrix> blocks) {
  BlockState s;
  s.blocks_ = std::move(blocks);
  return s;
}

BlockState::BlockState(std::vector<CMatrix> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) throw Error(ErrorCode::InvalidState, "state has no blocks");
  const auto h = blocks_.front().rows();
  if (h == 0) throw Error(ErrorCode::InvalidState, "empty blocks");
  for (const auto& b : blocks_) {
    if (b.rows() != h || b.cols() != h) {
      throw Error(ErrorCode::DimensionMismatch, "state blocks must all be h_dim x h_dim");
    }
  }
  const auto c = check();
  if (!c.pass()) {
    throw Error(ErrorCode::InvalidState,
                "min eigenvalue " + std::to_string(c.min_eigenvalue) + ", hermitian residual " +
                    std::to_string(c.hermitian_residual) + ", trace residual " +
                    std::to_string(c.trace_residual));
  }
}

BlockState BlockState::concentrated(const CMatrix& rho, Index at, Index d_size) {
  if (at >= d_size) throw Error(ErrorCode::IndexOutOfRange, "block index outside D");
  std::vector<CMatrix> blocks(d_size, CMatrix::Zero(rho.rows(), rho.cols()));
  blocks[at] = rho;
  return BlockState(std::move(blocks));
}

BlockState BlockState::from_density_matrix(const CMatrix& full, Index h_dim, Index d_size) {
  if (static_cast<Index>(full.rows()) != h_dim * d_size || full.rows() != full.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "density matrix must be (h*d) x (h*d)");
  }
  std::vector<CMatrix> blocks(d_size, CMatrix(h_dim, h_dim));
  for (Index j = 0; j < d_size; ++j) {
    for (Index a = 0; a < h_dim; ++a) {
      for (Index b = 0; b < h_dim; ++b) blocks[j](a, b) = full(a * d_size + j, b * d_size + j);
    }
  }
  return BlockState(std::move(blocks));
}

StateCheck BlockState::check() const {
  StateCheck c;
  double trace = 0.0;
  c.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (const auto& b : blocks_) {
    c.hermitian_residual = std::max(c.hermitian_residual, max_abs(b - b.adjoint()));
    const CMatrix herm = 0.5 * (b + b.adjoint());
    Eigen::SelfAdjointEigenSolver<CMatrix> es(herm, Eigen::EigenvaluesOnly);
    c.min_eigenvalue = std::min(c.min_eigenvalue, es.eigenvalues().minCoeff());
    trace += b.trace().real();
  }
  c.trace_residual = std::abs(trace - 1.0);
  return c;
}

Distribution distribution(const BlockState& state) {
  Distribution out;
  out.reserve(state.d_size());
  for (const auto& b : state.blocks()) out.push_back(b.trace().real());
  return out;
}

// ---------------------------------------------------------------------------
// Dynamics

BlockState step(const KrausFamily& family, Index k, const BlockState& state) {
  const Index d = family.d_size();
  const Index h = family.h_dim();
  if (state.d_size() != d || state.h_dim() != h) {
    throw Error(ErrorCode::DimensionMismatch, "state does not match the family");
  }
  if (k >= d) throw Error(ErrorCode::IndexOutOfRange, "jump " + std::to_string(k));
  std::vector<CMatrix> out(d, CMatrix::Zero(h, h));
  for (Index j = 0; j < d; ++j) {
    const CMatrix& rho = state.blocks()[j];
    if (max_abs(rho) == 0.0) continue;
    for (const auto& t : family.slot(j, k)) {
      out[t.i].noalias() += t.matrix * rho * t.matrix.adjoint();
    }
  }
  return BlockState::unchecked(std::move(out));
}

BlockState walk_state(const KrausFamily& family, const Word& word, const BlockState& state0) {
  BlockState cur = state0;
  for (Index k : word) cur = step(family, k, cur);
  return cur;
}

Distribution walk_distribution(const KrausFamily& family, const Word& word,
                               const BlockState& state0) {
  return distribution(walk_state(family, word, state0));
}

StructureTensor produced_tensor(const KrausFamily& family, const BlockState& state0) {
  const Index d = family.d_size();
  TensorBuilder<double> builder(d);
  builder.allow_undefined_rows(family.truncated());
  for (Index l = 0; l < d; ++l) {
    std::optional<BlockState> after_l;
    try {
      after_l = step(family, l, state0);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationExceeded) throw;
      continue;
    }
    for (Index k = 0; k < d; ++k) {
      Distribution p;
      try {
        p = distribution(step(family, k, *after_l));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TruncationExceeded) throw;
        continue;
      }
      builder.touch(k, l);
      for (Index m = 0; m < d; ++m) {
        // Rounding can leave traces of order 1e-17 where the exact value is 0.
        if (std::abs(p[m]) <= 1e-14) continue;
        builder.add(k, l, m, p[m]);
      }
    }
  }
  return builder.build();
}

Realization realize(const StructureTensor& tensor, Index h_dim,
                    const std::map<BlockKey, CMatrix>& isometries,
                    const std::optional<CMatrix>& rho0) {
  if (h_dim == 0) throw Error(ErrorCode::DimensionMismatch, "h_dim must be positive");
  const Index d = tensor.size();
  const CMatrix identity = CMatrix::Identity(h_dim, h_dim);
  for (const auto& [key, u] : isometries) {
    if (static_cast<Index>(u.rows()) != h_dim || static_cast<Index>(u.cols()) != h_dim) {
      throw Error(ErrorCode::DimensionMismatch,
                  "isometry " + format_tuple({key.i, key.j, key.k}) + " has wrong shape");
    }
    const double r = max_abs(u.adjoint() * u - identity);
    if (r > tol::kraus) {
      throw Error(ErrorCode::NotIsometric, "isometry " + format_tuple({key.i, key.j, key.k}) +
                                               " has residual " + std::to_string(r));
    }
  }
  std::map<BlockKey, CMatrix> blocks;
  std::set<Slot> undefined;
  for (Index k = 0; k < d; ++k) {
    for (Index j = 0; j < d; ++j) {
      if (!tensor.defined(k, j)) {
        undefined.insert({j, k});
        continue;
      }
      for (const auto& t : tensor.row(k, j)) {
        const BlockKey key{t.k, j, k};
        const auto it = isometries.find(key);
        const CMatrix& u = it == isometries.end() ? identity : it->second;
        blocks.emplace(key, std::sqrt(t.value) * u);
      }
    }
  }
  const CMatrix start = rho0 ? *rho0 : CMatrix(identity / static_cast<double>(h_dim));
  if (static_cast<Index>(start.rows()) != h_dim || start.rows() != start.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "rho0 must be h_dim x h_dim");
  }
  return {KrausFamily(d, h_dim, blocks, undefined), BlockState::concentrated(start, 0, d)};
}

std::map<BlockKey, CMatrix> random_isometries(const StructureTensor& tensor, Index h_dim,
                                              std::uint64_t seed) {
  const CounterRng root(seed);
  const Index d = tensor.size();
  std::map<BlockKey, CMatrix> out;
  for (Index k = 0; k < d; ++k) {
    for (Index j = 0; j < d; ++j) {
      if (!tensor.defined(k, j)) continue;
      for (const auto& t : tensor.row(k, j)) {
        CounterRng rng = root.split((t.k * d + j) * d + k);
        out.emplace(BlockKey{t.k, j, k}, random_unitary(h_dim, rng));
      }
    }
  }
  return out;
}

HbReport check_hb(const KrausFamily& family, const StructureTensor& tensor, kernels::Exec exec) {
  if (family.d_size() != tensor.size()) {
    throw Error(ErrorCode::SizeMismatch, "family has d_size " + std::to_string(family.d_size()) +
                                             ", tensor size " + std::to_string(tensor.size()));
  }
  const auto scan = kernels::hb_scan(family, tensor, tol::hb, exec);
  HbReport r;
  r.pass = scan.pass();
  r.max_residual = scan.max_residual;
  r.worst = scan.worst;
  r.first_violation = scan.first_violation;
  r.checked = scan.checked;
  return r;
}

Distribution mixture_distribution(const KrausFamily& family, const StructureTensor& tensor,
                                  const Word& word, const BlockState& state) {
  if (family.d_size() != tensor.size()) {
    throw Error(ErrorCode::SizeMismatch, "family and tensor sizes differ");
  }
  const Word reversed(word.rbegin(), word.rend());
  const auto weights = multi_constants(tensor, reversed);
  Distribution out(family.d_size(), 0.0);
  for (Index m = 0; m < weights.size(); ++m) {
    if (weights[m] == 0.0) continue;
    const auto p = distribution(step(family, m, state));
    for (Index i = 0; i < out.size(); ++i) out[i] += weights[m] * p[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Linear independence

const char* to_string(IndependenceKind kind) {
  switch (kind) {
    case IndependenceKind::Condition2: return "Condition2";
    case IndependenceKind::Condition1: return "Condition1";
    case IndependenceKind::Inconclusive: return "Inconclusive";
  }
  return "unknown";
}

namespace {

bool condition2_at(const KrausFamily& family, Index j0) {
  const Index d = family.d_size();
  const Index h = family.h_dim();
  const CMatrix identity = CMatrix::Identity(h, h);
  for (Index k = 0; k < d; ++k) {
    if (!family.slot_defined(j0, k)) return false;
    bool diagonal_found = false;
    for (const auto& t : family.slot(j0, k)) {
      if (t.i != k) {
        if (max_abs(t.matrix) > tol::kraus) return false;
        continue;
      }
      if (max_abs(t.matrix.adjoint() * t.matrix - identity) > tol::kraus) return false;
      diagonal_found = true;
    }
    if (!diagonal_found) return false;
  }
  return true;
}

bool condition1_at(const KrausFamily& family, Index j0, const CVector& xi) {
  const Index d = family.d_size();
  const Index h = family.h_dim();
  for (Index i = 0; i < d; ++i) {
    CMatrix columns = CMatrix::Zero(h, d);
    for (Index k = 0; k < d; ++k) {
      if (const CMatrix* b = family.block(i, j0, k)) columns.col(k) = *b * xi;
    }
    Eigen::JacobiSVD<CMatrix> svd(columns);
    const auto& sv = svd.singularValues();
    if (sv.size() < static_cast<Eigen::Index>(d)) return false;
    if (sv(0) <= 0.0 || sv(d - 1) <= 1e-8 * sv(0)) return false;
  }
  return true;
}

}  // namespace

IndependenceVerdict check_linear_independence(const KrausFamily& family, int trials,
                                              std::uint64_t seed) {
  IndependenceVerdict v;
  const Index d = family.d_size();
  for (Index j0 = 0; j0 < d; ++j0) {
    if (condition2_at(family, j0)) {
      v.kind = IndependenceKind::Condition2;
      v.j0 = j0;
      return v;
    }
  }
  // d vectors in C^h cannot be independent when d > h.
  if (d > family.h_dim()) return v;
  const CounterRng root(seed);
  for (Index j0 = 0; j0 < d; ++j0) {
    bool defined = true;
    for (Index k = 0; k < d; ++k) defined &= family.slot_defined(j0, k);
    if (!defined) continue;
    CounterRng rng = root.split(j0);
    for (int t = 0; t < trials; ++t) {
      const CVector xi = random_unit_vector(family.h_dim(), rng);
      if (condition1_at(family, j0, xi)) {
        v.kind = IndependenceKind::Condition1;
        v.j0 = j0;
        v.xi0 = xi;
        return v;
      }
    }
  }
  return v;
}

std::vector<BlockKey> non_scaled_isometries(const KrausFamily& family, double eps) {
  std::vector<BlockKey> out;
  const Index h = family.h_dim();
  const CMatrix identity = CMatrix::Identity(h, h);
  for (const auto& [key, b] : family.blocks()) {
    const CMatrix gram = b.adjoint() * b;
    const double c = gram.trace().real() / static_cast<double>(h);
    if (max_abs(gram - c * identity) > eps) out.push_back(key);
  }
  return out;
}

}  // namespace hyperwalk
