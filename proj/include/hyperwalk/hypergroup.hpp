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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperwalk/core.hpp"
#include "hyperwalk/kernels/residual.hpp"
#include "hyperwalk/structure_tensor.hpp"

namespace hyperwalk {

enum class Axiom { Stochasticity, Unit, Involution, Associativity, StarLaw, ZeroSupport };

const char* to_string(Axiom a);

struct AxiomCheck {
  Axiom axiom;
  bool pass = true;
  double worst_residual = 0.0;
  /// First violating index tuple (length depends on the axiom).
  std::optional<std::vector<Index>> witness;
  std::size_t checked = 0;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;
  bool hermitian = false;

  bool pass() const;
  const AxiomCheck& check(Axiom a) const;
};

/// Checks the discrete-hypergroup axioms for `tensor` with involution
/// `involution` and unit 0. Rows undefined through truncation are skipped.
ValidationReport validate_hypergroup(const StructureTensor& tensor, const Permutation& involution,
                                     kernels::Exec exec = kernels::Exec::Parallel);

/// A structure tensor together with an involution that passed validation.
class Hypergroup {
 public:
  /// Throws InvalidHypergroup listing the failing axioms.
  Hypergroup(StructureTensor tensor, Permutation involution);

  const StructureTensor& tensor() const noexcept { return tensor_; }
  const Permutation& involution() const noexcept { return involution_; }
  Index size() const noexcept { return tensor_.size(); }
  Index unit() const noexcept { return 0; }
  bool hermitian() const;

 private:
  StructureTensor tensor_;
  Permutation involution_;
};

/// Coefficients of the left-nested product (((x_k1 o x_k2) o ...) o x_kn).
///
/// Throws TruncationExceeded when the fold needs a row that was cut off.
template <class T>
std::vector<T> multi_constants(const BasicTensor<T>& tensor, std::span<const Index> word) {
  if (word.empty()) throw Error(ErrorCode::InvalidArgument, "word must be nonempty");
  const Index n = tensor.size();
  for (Index k : word) {
    if (k >= n) throw Error(ErrorCode::IndexOutOfRange, "letter " + std::to_string(k));
  }
  std::vector<T> cur(n, T(0));
  cur[word[0]] = T(1);
  for (std::size_t step = 1; step < word.size(); ++step) {
    std::vector<T> next(n, T(0));
    for (Index j = 0; j < n; ++j) {
      if (cur[j] == T(0)) continue;
      for (const auto& t : tensor.row(j, word[step])) next[t.k] += cur[j] * t.value;
    }
    cur = std::move(next);
  }
  return cur;
}

template <class T>
std::vector<T> multi_constants(const BasicTensor<T>& tensor, const Word& word) {
  return multi_constants(tensor, std::span<const Index>(word));
}

/// sigma(i) = the unique j with Q_{i,j}^0 > tol::prob. Throws NoCandidate,
/// Ambiguous, NotInvolutive, or TruncationExceeded when an undefined row
/// leaves sigma(i) undecided.
Permutation derive_involution(const StructureTensor& tensor);

/// Same rule, but indices whose decision depends on undefined rows are left
/// empty instead of throwing.
std::vector<std::optional<Index>> derive_partial_involution(const StructureTensor& tensor);

/// Degenerate hypergroup of a finite group: Q_{i,j}^{table[i][j]} = 1.
/// Identity must be index 0. Throws NotAGroup.
Hypergroup hypergroup_from_group(const std::vector<std::vector<Index>>& multiplication,
                                 const std::vector<Index>& inverse);

/// True iff phi(0)=0, phi o sigma1 = sigma2 o phi and the constants correspond.
bool check_isomorphism(const Hypergroup& h1, const Hypergroup& h2, const Permutation& phi);

bool is_permutation(const Permutation& p, Index n);

}  // namespace hyperwalk
