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

#include <doctest.h>

#include "hyperwalk/fixtures.hpp"
#include "hyperwalk/graph_walk.hpp"
#include "hyperwalk/verify.hpp"
#include "oracle.hpp"

using namespace hyperwalk;

namespace {

PointedGraph gen(const char* spec) { return generate_graph(GraphSpec::parse(spec)); }

void same_report(const VerificationReport& a, const VerificationReport& b) {
  CHECK(a.pass == b.pass);
  CHECK(a.checked_cases == b.checked_cases);
  CHECK(a.skipped_cases == b.skipped_cases);
  CHECK(a.max_residual == b.max_residual);
  CHECK(a.worst.has_value() == b.worst.has_value());
  if (a.worst && b.worst) {
    CHECK(a.worst->word == b.worst->word);
    CHECK(a.worst->tuple == b.worst->tuple);
    CHECK(a.worst->seed == b.worst->seed);
  }
}

}  // namespace

TEST_CASE("path sums equal multi-constants on symmetric graphs") {
  for (const char* spec : {"cycle(4)", "hypercube(3)", "cycle(5)", "complete(4)"}) {
    const auto g = gen(spec);
    const auto exact = verify_path_sums(g, 3, Arithmetic::Exact);
    CHECK(exact.pass);
    CHECK(exact.max_residual == 0.0);
    CHECK(exact.tolerance == 0.0);
    const auto floating = verify_path_sums(g, 3, Arithmetic::Float);
    CHECK(floating.pass);
    CHECK(floating.max_residual <= 1e-12);
    same_report(exact, verify_path_sums(g, 3, Arithmetic::Exact, kernels::Exec::Serial));
  }
  const auto c4 = verify_path_sums(gen("cycle(4)"), 3);
  CHECK(c4.checked_cases == (3 + 9 + 27) * 3);
  try {
    verify_path_sums(gen("path(3)"), 2);
    FAIL("expected ConditionSViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConditionSViolated);
  }
}

TEST_CASE("transition-matrix products") {
  const auto c4 = verify_transition_products(fixtures::c4().tensor(), 3);
  CHECK(c4.pass);
  CHECK(c4.max_residual <= 1e-12);
  CHECK(c4.checked_cases == 2 * (3 + 9 + 27));
  const auto k2 = hypergroup_from_group({{0, 1}, {1, 0}}, {0, 1});
  const auto r2 = verify_transition_products(k2.tensor(), 6);
  CHECK(r2.pass);
  CHECK(r2.max_residual == 0.0);
  // Non-commutative fixtures verify with the general ordering.
  CHECK(verify_transition_products(fixtures::s3_group().tensor(), 3).pass);
  const auto bad = verify_transition_products(fixtures::perturbed_c4(), 3);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.worst);
  // The oracle fold disagrees with the matrix products on the worst word too.
  const auto q = oracle::dense(fixtures::perturbed_c4());
  const auto w = bad.worst->word;
  Eigen::MatrixXd prod = Eigen::MatrixXd::Identity(3, 3);
  const auto p = transition_family(fixtures::perturbed_c4());
  for (Index k : w) prod = p[k] * prod;
  const auto f = oracle::fold(q, w);
  Eigen::MatrixXd mix = Eigen::MatrixXd::Zero(3, 3);
  for (Index m = 0; m < 3; ++m) mix += f[m] * p[m];
  CHECK((prod - mix).cwiseAbs().maxCoeff() == doctest::Approx(bad.max_residual));
  same_report(bad, verify_transition_products(fixtures::perturbed_c4(), 3, 1e-12,
                                              kernels::Exec::Serial));
}

TEST_CASE("walks factor through the constants when (HB) holds") {
  const auto c4 = fixtures::c4().tensor();
  const auto r = realize(c4, 2, random_isometries(c4, 2, 21));
  const auto rep = verify_mixture_factorization(r.family, c4, 4, 5, 3);
  CHECK(rep.pass);
  CHECK(rep.checked_cases == (3 + 9 + 27 + 81) * 5);
  CHECK(rep.max_residual <= 10 * tol::prob);
  same_report(rep, verify_mixture_factorization(r.family, c4, 4, 5, 3, 10 * tol::prob,
                                                kernels::Exec::Serial));

  const auto lo = verify_mixture_factorization(fixtures::left_zero_family(), fixtures::lo2(), 4,
                                               20, 7, 1e-9);
  CHECK(lo.pass);
  CHECK_FALSE(lo.converse.has_value());
}

TEST_CASE("a wrong tensor yields a converse witness") {
  const auto c4 = fixtures::c4().tensor();
  const auto z3 = fixtures::cyclic_group(3).tensor();
  const auto r = realize(c4, 2);
  const auto rep = verify_mixture_factorization(r.family, z3, 3, 4, 1);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.converse);
  CHECK(rep.converse->word.size() == 2);
  CHECK(rep.converse->mismatch > 1e-4);
  // Recompute the witness with the dense oracle.
  const auto basis = spanning_states(2);
  const auto state = BlockState::concentrated(basis[rep.converse->basis_index].rho,
                                              rep.converse->m, 3);
  const auto walk = oracle::walk(r.family, rep.converse->word, state);
  const Word rev(rep.converse->word.rbegin(), rep.converse->word.rend());
  const auto q = oracle::fold(oracle::dense(z3), rev);
  std::vector<double> mix(3, 0.0);
  for (Index m = 0; m < 3; ++m) {
    const auto p = oracle::measure(oracle::apply(r.family, m, oracle::full_state(state)), 2, 3);
    for (Index i = 0; i < 3; ++i) mix[i] += q[m] * p[i];
  }
  double diff = 0.0;
  for (Index i = 0; i < 3; ++i) diff = std::max(diff, std::abs(walk[i] - mix[i]));
  CHECK(diff == doctest::Approx(rep.converse->mismatch));

  const auto perturbed = fixtures::perturbed_c4();
  const auto rp = realize(perturbed, 2, random_isometries(perturbed, 2, 5));
  const auto bad = verify_mixture_factorization(rp.family, perturbed, 3, 4, 1);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.converse);
  CHECK(bad.converse->mismatch >= 1e-4);
}

TEST_CASE("spanning states are density matrices spanning the hermitian matrices") {
  const auto b = spanning_states(3);
  CHECK(b.size() == 9);
  Eigen::MatrixXd coords(18, 9);
  for (std::size_t s = 0; s < b.size(); ++s) {
    CHECK(BlockState({b[s].rho}).check().pass());
    for (Index r = 0; r < 3; ++r)
      for (Index c = 0; c < 3; ++c) {
        coords(r * 3 + c, s) = b[s].rho(r, c).real();
        coords(9 + r * 3 + c, s) = b[s].rho(r, c).imag();
      }
  }
  CHECK(Eigen::FullPivLU<Eigen::MatrixXd>(coords).rank() == 9);
}

TEST_CASE("round trips through realization") {
  const auto z3 = verify_roundtrip(fixtures::cyclic_group(3), 2, std::nullopt);
  CHECK(z3.pass);
  CHECK(z3.note.empty());
  CHECK(verify_roundtrip(fixtures::c4(), 2, 99).pass);
  const auto z8 = verify_roundtrip(fixtures::z_window(8), 2, 4);
  CHECK(z8.pass);
  CHECK(z8.max_residual <= tol::prob);
}

TEST_CASE("random block states") {
  const auto a = random_block_state(3, 4, 42);
  const auto b = random_block_state(3, 4, 42);
  for (Index i = 0; i < 4; ++i) CHECK(max_abs(a.blocks()[i] - b.blocks()[i]) == 0.0);
  CHECK(a.check().pass());
  const auto c = random_block_state(3, 4, 43);
  CHECK(max_abs(a.blocks()[0] - c.blocks()[0]) > 0.0);
  const auto scalar = random_block_state(1, 5, 1);
  double sum = 0.0;
  for (double p : distribution(scalar)) {
    CHECK(p >= 0.0);
    sum += p;
  }
  CHECK(std::abs(sum - 1.0) <= tol::prob);
}

TEST_CASE("three routes agree on symmetric graphs") {
  for (const char* spec : {"cycle(4)", "cycle(6)", "hypercube(3)", "complete(5)"}) {
    const auto g = gen(spec);
    const auto t = wildberger_tensor(g).to_double();
    const auto r = realize(t, 1);
    const SphereTable s(g);
    for (const auto& w : all_words_up_to(t.size(), 3)) {
      const auto paths = oracle::path_sums(g, w);
      const auto folds = multi_constants(t, w);
      const Word rev(w.rbegin(), w.rend());
      const auto quantum = walk_distribution(r.family, rev, r.state);
      for (Index m = 0; m < t.size(); ++m) {
        CHECK(std::abs(paths[m] - folds[m]) <= 10 * tol::prob);
        CHECK(std::abs(paths[m] - quantum[m]) <= 10 * tol::prob);
      }
    }
  }
}

TEST_CASE("thread cap from the environment") {
  setenv("HYPERWALK_THREADS", "2", 1);
  CHECK(apply_thread_limit_from_env() == 2);
  setenv("HYPERWALK_THREADS", "zero", 1);
  CHECK(apply_thread_limit_from_env() == 0);
  unsetenv("HYPERWALK_THREADS");
  CHECK(apply_thread_limit_from_env() == 0);
}
