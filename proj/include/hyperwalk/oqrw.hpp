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

// Open quantum random walks on a distance set D = {0, ..., d_size-1}.
//
// A walk is a family of Kraus blocks B_{i,j;k} acting on the degree-of-freedom
// space H = C^h_dim: B_{i,j;k} moves the walker from distance j to distance i
// on a jump of length k. The map M_k sends the block-diagonal state
// sum_j rho_j (x) |j><j| to sum_i (sum_j B_{i,j;k} rho_j B_{i,j;k}^*) (x) |i><i|.
//
// Word order convention, used everywhere in this header:
//   * walk_distribution(word = (k1, ..., kn)) applies M_k1 first, M_kn last.
//   * produced_tensor reads z_k o z_l off the walk (l, k): M_l then M_k.
//   * mixture_distribution weighs M_m by the multi-constants of the REVERSED
//     word, Q_{kn, ..., k1}^m.

#pragma once

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hyperwalk/core.hpp"
#include "hyperwalk/kernels/residual.hpp"
#include "hyperwalk/random.hpp"
#include "hyperwalk/structure_tensor.hpp"

namespace hyperwalk {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Probability vector over D.
using Distribution = std::vector<double>;

struct BlockKey {
  Index i;
  Index j;
  Index k;
  auto operator<=>(const BlockKey&) const = default;
};

using Slot = std::pair<Index, Index>;  // (j, k)

/// Sparse family of Kraus blocks. Exactly-zero matrices are not stored.
/// Slots (j, k) listed as undefined belong to a truncated family; stepping
/// mass through them throws TruncationExceeded.
class KrausFamily {
 public:
  struct Term {
    Index i;
    CMatrix matrix;
  };

  KrausFamily(Index d_size, Index h_dim, const std::map<BlockKey, CMatrix>& blocks,
              const std::set<Slot>& undefined_slots = {});

  Index d_size() const noexcept { return d_size_; }
  Index h_dim() const noexcept { return h_dim_; }
  bool truncated() const noexcept { return truncated_; }
  bool slot_defined(Index j, Index k) const;

  /// Nonzero blocks B_{i,j;k} for fixed (j, k), sorted by i.
  const std::vector<Term>& slot(Index j, Index k) const;

  /// nullptr when the block is zero.
  const CMatrix* block(Index i, Index j, Index k) const;

  std::map<BlockKey, CMatrix> blocks() const;
  std::set<Slot> undefined_slots() const;

 private:
  Index d_size_;
  Index h_dim_;
  bool truncated_ = false;
  std::vector<std::optional<std::vector<Term>>> slots_;
};

struct KrausReport {
  bool pass = true;
  double max_residual = 0.0;
  std::optional<Slot> worst_slot;
  /// ||sum_i B^* B - 1||_max per defined slot.
  std::map<Slot, double> residuals;
};

/// Completeness sum_i B_{i,j;k}^* B_{i,j;k} = 1 per defined slot.
KrausReport validate_kraus(const KrausFamily& family);

struct StateCheck {
  double min_eigenvalue = 0.0;
  double hermitian_residual = 0.0;
  double trace_residual = 0.0;
  bool pass() const {
    return min_eigenvalue >= -tol::psd && hermitian_residual <= tol::psd &&
           trace_residual <= tol::prob;
  }
};

/// Block-diagonal density operator sum_i rho_i (x) |i><i|.
class BlockState {
 public:
  /// Validates PSD blocks and unit total trace; throws InvalidState.
  explicit BlockState(std::vector<CMatrix> blocks);

  /// No validation; used for intermediate results of trusted maps.
  static BlockState unchecked(std::vector<CMatrix> blocks);

  /// rho_0 (x) |at><at|.
  static BlockState concentrated(const CMatrix& rho, Index at, Index d_size);

  /// Extracts rho_j = U_j^* rho U_j from a full (h*d) x (h*d) density matrix
  /// indexed as a * d_size + j; off-diagonal blocks are discarded.
  static BlockState from_density_matrix(const CMatrix& full, Index h_dim, Index d_size);

  const std::vector<CMatrix>& blocks() const noexcept { return blocks_; }
  Index d_size() const noexcept { return blocks_.size(); }
  Index h_dim() const noexcept { return blocks_.empty() ? 0 : blocks_.front().rows(); }

  StateCheck check() const;

 private:
  BlockState() = default;
  std::vector<CMatrix> blocks_;
};

Distribution distribution(const BlockState& state);

/// One application of M_k.
BlockState step(const KrausFamily& family, Index k, const BlockState& state);

/// d(M_kn o ... o M_k1 (state0)).
Distribution walk_distribution(const KrausFamily& family, const Word& word,
                               const BlockState& state0);

/// Final state M_kn o ... o M_k1 (state0).
BlockState walk_state(const KrausFamily& family, const Word& word, const BlockState& state0);

/// Q_{k,l}^m = Tr(rho_m^{(2;(l,k))}). Rows whose walk leaves a truncated
/// family become undefined rows of the result.
StructureTensor produced_tensor(const KrausFamily& family, const BlockState& state0);

struct Realization {
  KrausFamily family;
  BlockState state;
};

/// B_{i,j;k} = sqrt(Q_{k,j}^i) U_{i,j;k} and rho^(0) = rho0 (x) |0><0|.
/// Missing isometries default to the identity and rho0 to 1/h_dim.
/// Throws NotIsometric or DimensionMismatch on bad isometries.
Realization realize(const StructureTensor& tensor, Index h_dim,
                    const std::map<BlockKey, CMatrix>& isometries = {},
                    const std::optional<CMatrix>& rho0 = std::nullopt);

/// Independent Haar unitaries for every support entry of `tensor`, one split
/// stream per (i, j, k) so the draw for a key does not depend on the others.
std::map<BlockKey, CMatrix> random_isometries(const StructureTensor& tensor, Index h_dim,
                                              std::uint64_t seed);

struct HbReport {
  bool pass = true;
  double max_residual = 0.0;
  std::optional<std::array<Index, 4>> worst;  // (i, j, k, l)
  std::optional<std::array<Index, 4>> first_violation;
  std::size_t checked = 0;
};

/// Condition (HB): for all (i, j, k, l)
///   sum_m B_{m,j;l}^* B_{i,m;k}^* B_{i,m;k} B_{m,j;l} = sum_m Q_{k,l}^m B_{i,j;m}^* B_{i,j;m}
/// in entrywise max norm, within tol::hb.
HbReport check_hb(const KrausFamily& family, const StructureTensor& tensor,
                  kernels::Exec exec = kernels::Exec::Parallel);

/// d(sum_m Q_{kn,...,k1}^m M_m(state)).
Distribution mixture_distribution(const KrausFamily& family, const StructureTensor& tensor,
                                  const Word& word, const BlockState& state);

enum class IndependenceKind { Condition2, Condition1, Inconclusive };

const char* to_string(IndependenceKind kind);

struct IndependenceVerdict {
  IndependenceKind kind = IndependenceKind::Inconclusive;
  std::optional<Index> j0;
  std::optional<CVector> xi0;
};

/// Sufficient conditions for linear independence of {M_k}. Condition (2) is
/// checked structurally; condition (1) by sampling `trials` random unit
/// vectors per candidate j0.
IndependenceVerdict check_linear_independence(const KrausFamily& family, int trials,
                                              std::uint64_t seed);

/// Blocks that are not a scalar multiple of an isometry (B^* B != c 1).
std::vector<BlockKey> non_scaled_isometries(const KrausFamily& family, double eps = tol::kraus);

double max_abs(const CMatrix& m);

}  // namespace hyperwalk
