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

// Brute-force oracles tying three routes together: path sums on graphs,
// algebra folds of structure constants, and compositions of quantum maps.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperwalk/graph.hpp"
#include "hyperwalk/hypergroup.hpp"
#include "hyperwalk/kernels/residual.hpp"
#include "hyperwalk/oqrw.hpp"

namespace hyperwalk {

struct WorstCase {
  Word word;
  std::optional<std::uint64_t> seed;
  std::vector<Index> tuple;
  std::string note;
};

/// A state rho' (x) |m><m| and a length-2 word on which the walk and the
/// mixture disagree.
struct ConverseWitness {
  Index m = 0;
  std::size_t basis_index = 0;
  std::string basis_label;
  Word word;
  double mismatch = 0.0;
  Distribution walk;
  Distribution mixture;
};

struct VerificationReport {
  std::string name;
  std::size_t checked_cases = 0;
  std::size_t skipped_cases = 0;
  double max_residual = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::optional<WorstCase> worst;
  std::optional<ConverseWitness> converse;
  std::string note;
};

enum class Arithmetic { Exact, Float };

/// Blocks A_i A_i^* from complex Gaussian A_i, scaled to total trace 1.
/// Block i draws from the stream split(i) of CounterRng(seed).
BlockState random_block_state(Index h_dim, Index d_size, std::uint64_t seed);

/// Path sums against multi-constants of the Wildberger tensor for every word
/// of length 1..max_word_len. Exact mode has tolerance 0, float mode 1e-12.
/// Throws ConditionSViolated. Words that reach a window boundary are skipped.
VerificationReport verify_path_sums(const PointedGraph& graph, std::size_t max_word_len,
                                      Arithmetic mode = Arithmetic::Exact,
                                      kernels::Exec exec = kernels::Exec::Parallel);

/// P_kn ... P_k1 = sum_m q_{k1..kn}^m P_m and e_0^T P_kn ... P_k1 = q_{k1..kn}
/// for every word of length 1..max_word_len.
VerificationReport verify_transition_products(const StructureTensor& tensor, std::size_t max_word_len,
                                        double tolerance = 1e-12,
                                        kernels::Exec exec = kernels::Exec::Parallel);

/// When (HB) holds: walk and mixture distributions agree for every word of
/// length 1..max_word_len and n_states seeded random states. When it fails:
/// searches m, then the spanning states, then length-2 words in lex order for
/// the first mismatch above `tolerance`.
VerificationReport verify_mixture_factorization(const KrausFamily& family, const StructureTensor& tensor,
                                      std::size_t max_word_len, std::size_t n_states,
                                      std::uint64_t seed, double tolerance = 10 * tol::prob,
                                      kernels::Exec exec = kernels::Exec::Parallel);

/// Realize, read the constants back, rederive the involution and revalidate.
/// Random unitaries are drawn when `seed` is set, identities otherwise.
VerificationReport verify_roundtrip(const Hypergroup& hypergroup, Index h_dim,
                                    std::optional<std::uint64_t> seed,
                                    double tolerance = tol::prob);

/// Hermitian density matrices spanning the h x h hermitian matrices:
/// E_aa, then (E_aa + E_bb + E_ab + E_ba)/2 and (E_aa + E_bb - i E_ab + i E_ba)/2
/// for a < b.
struct SpanningState {
  std::string label;
  CMatrix rho;
};
std::vector<SpanningState> spanning_states(Index h_dim);

/// Caps OpenMP workers at HYPERWALK_THREADS when it holds a positive integer.
/// Returns the cap applied, or 0.
int apply_thread_limit_from_env();

}  // namespace hyperwalk
