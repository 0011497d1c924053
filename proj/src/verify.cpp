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

#include "hyperwalk/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>

#include <omp.h>

#include "hyperwalk/graph_walk.hpp"
#include "hyperwalk/kernels/words.hpp"
#include "hyperwalk/random.hpp"

namespace hyperwalk {

namespace {

void fill_worst(VerificationReport& r, const kernels::CaseScan& scan,
                const std::vector<Word>& words) {
  r.checked_cases = scan.checked;
  r.skipped_cases = scan.skipped;
  r.max_residual = scan.max_residual;
  if (scan.worst_case) {
    WorstCase w;
    w.word = words[*scan.worst_case % words.size()];
    if (scan.worst_entry) w.tuple = {*scan.worst_entry};
    r.worst = std::move(w);
  }
  r.pass = r.max_residual <= r.tolerance;
}

double max_diff(const Distribution& a, const Distribution& b, Index* where = nullptr) {
  double best = 0.0;
  for (Index i = 0; i < a.size(); ++i) {
    const double r = std::abs(a[i] - b[i]);
    if (r > best) {
      best = r;
      if (where) *where = i;
    }
  }
  return best;
}

}  // namespace

BlockState random_block_state(Index h_dim, Index d_size, std::uint64_t seed) {
  if (h_dim == 0 || d_size == 0) throw Error(ErrorCode::InvalidArgument, "dimensions must be positive");
  const CounterRng root(seed);
  std::vector<CMatrix> blocks;
  blocks.reserve(d_size);
  double trace = 0.0;
  for (Index i = 0; i < d_size; ++i) {
    CounterRng rng = root.split(i);
    const CMatrix a = random_complex_matrix(h_dim, h_dim, rng);
    CMatrix b = a * a.adjoint();
    b = 0.5 * (b + b.adjoint());
    trace += b.trace().real();
    blocks.push_back(std::move(b));
  }
  for (auto& b : blocks) b /= trace;
  return BlockState(std::move(blocks));
}

VerificationReport verify_path_sums(const PointedGraph& graph, std::size_t max_word_len,
                                    Arithmetic mode, kernels::Exec exec) {
  const SphereTable spheres(graph, exec);
  const auto s = check_condition_S(graph, spheres);
  if (!s.holds) throw Error(ErrorCode::ConditionSViolated, s.detail);
  const ExactTensor exact = wildberger_tensor(graph, spheres);
  const StructureTensor floating = exact.to_double();
  const auto words = all_words_up_to(spheres.index_size(), max_word_len);

  VerificationReport r;
  r.name = "path-sums";
  r.tolerance = mode == Arithmetic::Exact ? 0.0 : 1e-12;
  const auto scan = kernels::case_scan(words.size(), exec, [&](std::size_t c,
                                                                kernels::CaseScan& acc) {
    const Word& w = words[c];
    try {
      if (mode == Arithmetic::Exact) {
        const auto lhs = path_sum_distribution<Rational>(graph, spheres, w);
        const auto rhs = multi_constants(exact, w);
        for (Index m = 0; m < lhs.size(); ++m) {
          acc.observe(to_double(Rational(abs(lhs[m] - rhs[m]))), c, m);
        }
      } else {
        const auto lhs = path_sum_distribution<double>(graph, spheres, w);
        const auto rhs = multi_constants(floating, w);
        for (Index m = 0; m < lhs.size(); ++m) acc.observe(std::abs(lhs[m] - rhs[m]), c, m);
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TruncationExceeded) throw;
      ++acc.skipped;
    }
  });
  fill_worst(r, scan, words);
  if (r.worst) r.worst->note = "entry m of the distance distribution";
  return r;
}

VerificationReport verify_transition_products(const StructureTensor& tensor,
                                              std::size_t max_word_len, double tolerance,
                                              kernels::Exec exec) {
  const auto p = transition_family(tensor);
  const Index n = tensor.size();
  const auto words = all_words_up_to(n, max_word_len);
  VerificationReport r;
  r.name = "transition-products";
  r.tolerance = tolerance;
  // Entry index n * n stands for the row-vector identity.
  const auto scan = kernels::case_scan(words.size(), exec, [&](std::size_t c,
                                                                kernels::CaseScan& acc) {
    const Word& w = words[c];
    Eigen::MatrixXd product = Eigen::MatrixXd::Identity(n, n);
    for (Index k : w) product = p[k] * product;
    const auto q = multi_constants(tensor, w);
    Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(n, n);
    for (Index m = 0; m < n; ++m) mix += q[m] * p[m];
    const Eigen::MatrixXd diff = (product - mix).cwiseAbs();
    Eigen::Index row = 0, col = 0;
    const double worst = diff.maxCoeff(&row, &col);
    acc.observe(worst, c, static_cast<Index>(row) * n + static_cast<Index>(col));
    double row_worst = 0.0;
    for (Index m = 0; m < n; ++m) row_worst = std::max(row_worst, std::abs(product(0, m) - q[m]));
    acc.observe(row_worst, c, n * n);
  });
  fill_worst(r, scan, words);
  if (r.worst && !r.worst->tuple.empty()) {
    const Index e = r.worst->tuple.front();
    r.worst->tuple = e == n * n ? std::vector<Index>{} : std::vector<Index>{e / n, e % n};
    r.worst->note = e == n * n ? "row vector e_0^T times the product" : "matrix entry (i, j)";
  }
  return r;
}

std::vector<SpanningState> spanning_states(Index h_dim) {
  std::vector<SpanningState> out;
  for (Index a = 0; a < h_dim; ++a) {
    CMatrix rho = CMatrix::Zero(h_dim, h_dim);
    rho(a, a) = 1.0;
    out.push_back({"E" + std::to_string(a) + std::to_string(a), rho});
  }
  const std::complex<double> i(0.0, 1.0);
  for (Index a = 0; a < h_dim; ++a) {
    for (Index b = a + 1; b < h_dim; ++b) {
      CMatrix re = CMatrix::Zero(h_dim, h_dim);
      re(a, a) = re(b, b) = re(a, b) = re(b, a) = 0.5;
      out.push_back({"re" + std::to_string(a) + std::to_string(b), re});
    }
  }
  for (Index a = 0; a < h_dim; ++a) {
    for (Index b = a + 1; b < h_dim; ++b) {
      CMatrix im = CMatrix::Zero(h_dim, h_dim);
      im(a, a) = im(b, b) = 0.5;
      im(a, b) = -0.5 * i;
      im(b, a) = 0.5 * i;
      out.push_back({"im" + std::to_string(a) + std::to_string(b), im});
    }
  }
  return out;
}

VerificationReport verify_mixture_factorization(const KrausFamily& family,
                                                const StructureTensor& tensor,
                                                std::size_t max_word_len, std::size_t n_states,
                                                std::uint64_t seed, double tolerance,
                                                kernels::Exec exec) {
  const auto hb = check_hb(family, tensor, exec);
  const Index d = family.d_size();
  const Index h = family.h_dim();
  VerificationReport r;
  r.name = "mixture-factorization";

  if (hb.pass) {
    r.tolerance = tolerance;
    const auto words = all_words_up_to(d, max_word_len);
    const CounterRng root(seed);
    std::vector<BlockState> states;
    std::vector<std::uint64_t> seeds;
    for (std::size_t s = 0; s < n_states; ++s) {
      seeds.push_back(root.split(s).key());
      states.push_back(random_block_state(h, d, seeds.back()));
    }
    const std::size_t cases = words.size() * states.size();
    const auto scan = kernels::case_scan(cases, exec, [&](std::size_t c, kernels::CaseScan& acc) {
      const Word& w = words[c % words.size()];
      const BlockState& st = states[c / words.size()];
      try {
        const auto walk = walk_distribution(family, w, st);
        const auto mix = mixture_distribution(family, tensor, w, st);
        Index where = 0;
        acc.observe(max_diff(walk, mix, &where), c, where);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TruncationExceeded) throw;
        ++acc.skipped;
      }
    });
    fill_worst(r, scan, words);
    if (r.worst && scan.worst_case) {
      r.worst->seed = seeds[*scan.worst_case / words.size()];
      r.worst->note = "entry of the distribution";
    }
    r.note = "(HB) holds, max residual " + std::to_string(hb.max_residual);
    return r;
  }

  // (HB) fails: the walk cannot factor through the tensor for every state.
  r.tolerance = tol::hb;
  r.max_residual = hb.max_residual;
  r.pass = false;
  r.checked_cases = hb.checked;
  if (hb.worst) {
    WorstCase w;
    w.tuple.assign(hb.worst->begin(), hb.worst->end());
    w.note = "(HB) tuple (i, j, k, l)";
    r.worst = std::move(w);
  }
  const auto basis = spanning_states(h);
  const auto words = all_words(d, 2);
  for (Index m = 0; m < d && !r.converse; ++m) {
    for (std::size_t b = 0; b < basis.size() && !r.converse; ++b) {
      const auto state = BlockState::concentrated(basis[b].rho, m, d);
      for (const Word& w : words) {
        Distribution walk, mix;
        try {
          walk = walk_distribution(family, w, state);
          mix = mixture_distribution(family, tensor, w, state);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::TruncationExceeded) throw;
          continue;
        }
        const double diff = max_diff(walk, mix);
        if (diff <= tolerance) continue;
        r.converse = ConverseWitness{m, b, basis[b].label, w, diff, walk, mix};
        break;
      }
    }
  }
  r.note = r.converse ? "(HB) fails; converse witness found" : "(HB) fails; no converse witness";
  return r;
}

VerificationReport verify_roundtrip(const Hypergroup& hypergroup, Index h_dim,
                                    std::optional<std::uint64_t> seed, double tolerance) {
  const StructureTensor& t = hypergroup.tensor();
  const auto isometries = seed ? random_isometries(t, h_dim, *seed)
                               : std::map<BlockKey, CMatrix>{};
  const auto realization = realize(t, h_dim, isometries);
  const StructureTensor produced = produced_tensor(realization.family, realization.state);

  VerificationReport r;
  r.name = "roundtrip";
  r.tolerance = tolerance;
  const Index n = t.size();
  std::vector<std::string> problems;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (t.defined(i, j) != produced.defined(i, j)) {
        problems.push_back("row " + format_tuple({i, j}) + " definedness differs");
        continue;
      }
      if (!t.defined(i, j)) continue;
      const auto a = t.dense_row(i, j);
      const auto b = produced.dense_row(i, j);
      for (Index k = 0; k < n; ++k) {
        ++r.checked_cases;
        const double diff = std::abs(a[k] - b[k]);
        if (!r.worst || diff > r.max_residual) {
          r.max_residual = diff;
          r.worst = WorstCase{{}, seed, {i, j, k}, "structure constant (i, j, k)"};
        }
      }
    }
  }
  const auto partial = derive_partial_involution(produced);
  for (Index i = 0; i < n; ++i) {
    if (!partial[i]) {
      if (!t.truncated()) problems.push_back("involution of " + std::to_string(i) + " unresolved");
      continue;
    }
    if (*partial[i] != hypergroup.involution()[i]) {
      problems.push_back("involution differs at " + std::to_string(i));
    }
  }
  if (!validate_hypergroup(produced, hypergroup.involution()).pass()) {
    problems.push_back("produced tensor fails validation");
  }
  r.pass = r.max_residual <= tolerance && problems.empty();
  for (const auto& p : problems) r.note += (r.note.empty() ? "" : "; ") + p;
  return r;
}

int apply_thread_limit_from_env() {
  const char* value = std::getenv("HYPERWALK_THREADS");
  if (!value || !*value) return 0;
  char* end = nullptr;
  const long n = std::strtol(value, &end, 10);
  if (*end != '\0' || n <= 0) return 0;
  omp_set_num_threads(static_cast<int>(n));
  return static_cast<int>(n);
}

}  // namespace hyperwalk
