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

#include "hyperwalk/graph.hpp"
#include "hyperwalk/graph_walk.hpp"
#include "hyperwalk/hypergroup.hpp"
#include "hyperwalk/kernels/graph.hpp"
#include "oracle.hpp"

using namespace hyperwalk;

namespace {

PointedGraph gen(const char* spec) { return generate_graph(GraphSpec::parse(spec)); }

PointedGraph rebased(const PointedGraph& g, Index base) {
  return PointedGraph(g.labels(), g.edges(), base, g.boundary_radius());
}

const char* kSymmetric[] = {"cycle(4)", "cycle(5)", "cycle(6)", "cycle(7)", "complete(2)",
                            "complete(4)", "hypercube(2)", "hypercube(3)", "hypercube(4)"};

}  // namespace

TEST_CASE("spheres of small graphs") {
  const auto c4 = gen("cycle(4)");
  const SphereTable s(c4);
  CHECK(s.index_set() == std::vector<Index>{0, 1, 2});
  CHECK(s.sphere(0, 1).size() == 2);
  CHECK(s.sphere(0, 2).size() == 1);

  const SphereTable k2(gen("complete(2)"));
  CHECK(k2.index_set() == std::vector<Index>{0, 1});
  CHECK(k2.distance(0, 1) == 1);
  CHECK(k2.distance(1, 0) == 1);
  CHECK(k2.distance(0, 0) == 0);

  const auto q3 = gen("hypercube(3)");
  for (Index base = 0; base < 8; ++base) {
    const SphereTable t(rebased(q3, base));
    CHECK(t.index_set() == std::vector<Index>{0, 1, 2, 3});
    CHECK(t.sphere(base, 1).size() == 3);
    CHECK(t.sphere(base, 2).size() == 3);
    CHECK(t.sphere(base, 3).size() == 1);
  }
}

TEST_CASE("breadth-first distances match Floyd-Warshall, serial and parallel") {
  for (const char* spec : {"cycle(9)", "complete(5)", "hypercube(4)", "path(6)", "line_window(5)",
                           "free_ball(2,2)", "free_ball(3,2)"}) {
    const auto g = gen(spec);
    const auto d = oracle::distances(g);
    const SphereTable serial(g, kernels::Exec::Serial);
    const SphereTable parallel(g, kernels::Exec::Parallel);
    CHECK(serial.distances() == parallel.distances());
    for (Index v = 0; v < g.vertex_count(); ++v)
      for (Index w = 0; w < g.vertex_count(); ++w) CHECK(serial.distance(v, w) == d[v][w]);
  }
}

TEST_CASE("graph construction errors") {
  CHECK_THROWS_AS(PointedGraph({"a", "b"}, {{0, 0}}, 0), Error);
  CHECK_THROWS_AS(PointedGraph({"a", "b"}, {{0, 1}, {1, 0}}, 0), Error);
  CHECK_THROWS_AS(PointedGraph({"a", "a"}, {{0, 1}}, 0), Error);
  try {
    PointedGraph({"a", "b", "c", "d"}, {{0, 1}, {2, 3}}, 0);
    FAIL("expected DisconnectedGraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedGraph);
  }
  CHECK_THROWS_AS(gen("cycle(2)"), Error);
  CHECK_THROWS_AS(GraphSpec::parse("torus(3)"), Error);
}

TEST_CASE("generated graphs") {
  const auto ball = gen("free-ball(2,3)");
  CHECK(ball.vertex_count() == 1 + 4 + 12 + 36);
  CHECK(ball.labels()[ball.base()] == "e");
  CHECK(ball.neighbors(ball.base()).size() == 4);
  CHECK(ball.boundary_radius() == std::optional<Index>(3));
  const auto window = gen("line_window(3)");
  CHECK(window.vertex_count() == 7);
  CHECK(window.labels()[window.base()] == "0");
  CHECK(gen("complete(2)").edges().size() == 1);
}

TEST_CASE("Wildberger constants of the 4-cycle") {
  const auto t = wildberger_tensor(gen("cycle(4)"));
  CHECK(t.at(1, 1, 0) == Rational(1, 2));
  CHECK(t.at(1, 1, 2) == Rational(1, 2));
  CHECK(t.at(1, 1, 1) == 0);
  CHECK(t.at(1, 2, 1) == 1);
  CHECK(t.at(2, 1, 1) == 1);
  CHECK(t.at(2, 2, 0) == 1);
  CHECK(validate_hypergroup(t.to_double(), {0, 1, 2}).pass());

  const auto k2 = wildberger_tensor(gen("complete(2)"));
  CHECK(k2.at(1, 1, 0) == 1);
}

TEST_CASE("Wildberger constants agree with the counting oracle") {
  for (const char* spec : {"cycle(4)", "cycle(5)", "cycle(8)", "complete(4)", "hypercube(3)",
                           "hypercube(4)", "free_ball(2,2)", "line_window(6)"}) {
    const auto g = gen(spec);
    const auto t = wildberger_tensor(g);
    const auto p = oracle::wildberger(g);
    REQUIRE(p.size() == t.size());
    for (Index i = 0; i < t.size(); ++i)
      for (Index j = 0; j < t.size(); ++j) {
        if (!t.defined(i, j)) {
          CHECK(g.boundary_radius());
          CHECK(i + j > *g.boundary_radius());
          continue;
        }
        for (Index k = 0; k < t.size(); ++k) CHECK(t.at(i, j, k) == p[i][j][k]);
      }
  }
}

TEST_CASE("line window constants are half at |i-j| and half at i+j") {
  const Index r = 12;
  const auto t = wildberger_tensor(gen("line_window(12)"));
  for (Index i = 0; i <= r; ++i)
    for (Index j = 0; i + j <= r; ++j) {
      std::vector<Rational> want(r + 1, Rational(0));
      const Index lo = i > j ? i - j : j - i;
      if (i == 0 || j == 0) {
        want[i + j] = 1;
      } else {
        want[lo] += Rational(1, 2);
        want[i + j] += Rational(1, 2);
      }
      CHECK(t.dense_row(i, j) == want);
    }
}

TEST_CASE("condition (S) and distance regularity") {
  for (const char* spec : kSymmetric) {
    const auto g = gen(spec);
    const SphereTable s(g);
    CHECK_MESSAGE(check_condition_S(g, s).holds, spec);
    CHECK_MESSAGE(check_distance_regular(g, s, kernels::Exec::Serial).holds, spec);
  }
  const auto p3 = gen("path(3)");
  const SphereTable s(p3);
  const auto cs = check_condition_S(p3, s);
  CHECK_FALSE(cs.holds);
  CHECK(cs.witness.front() == 1);  // |S_1| differs
  CHECK(p3.labels()[cs.witness.back()] == "1");
  CHECK_FALSE(check_distance_regular(p3, s).holds);
  CHECK_FALSE(check_sphere_assumption(p3, s).holds);
  CHECK(check_sphere_assumption(gen("cycle(4)"), SphereTable(gen("cycle(4)"))).holds);

  // Windows and balls are not regular near their boundary.
  for (const char* spec : {"path(5)", "line_window(4)", "free_ball(2,2)"}) {
    const auto g = gen(spec);
    const SphereTable t(g);
    const auto serial = check_distance_regular(g, t, kernels::Exec::Serial);
    const auto parallel = check_distance_regular(g, t, kernels::Exec::Parallel);
    CHECK_FALSE(serial.holds);
    CHECK(serial.witness == parallel.witness);
  }
}

TEST_CASE("distance-regular graphs give base-independent constants") {
  for (const char* spec : kSymmetric) {
    const auto g = gen(spec);
    const auto t0 = wildberger_tensor(g);
    for (Index b = 1; b < g.vertex_count(); ++b) {
      const auto tb = wildberger_tensor(rebased(g, b));
      for (Index i = 0; i < t0.size(); ++i)
        for (Index j = 0; j < t0.size(); ++j) CHECK(t0.dense_row(i, j) == tb.dense_row(i, j));
    }
  }
}

TEST_CASE("empty spheres are reported") {
  try {
    wildberger_tensor(gen("path(3)"));
    FAIL("expected EmptySphere");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptySphere);
  }
}

TEST_CASE("path sums") {
  const auto c4 = gen("cycle(4)");
  const SphereTable s(c4);
  const auto p = path_sum_distribution<Rational>(c4, s, Word{1, 1});
  CHECK(p == std::vector<Rational>{Rational(1, 2), Rational(0), Rational(1, 2)});
  CHECK(path_sum_distribution<Rational>(c4, s, Word{0}) ==
        std::vector<Rational>{Rational(1), Rational(0), Rational(0)});

  const auto q3 = gen("hypercube(3)");
  const SphereTable sq(q3);
  const auto t = wildberger_tensor(q3, sq);
  CHECK(path_sum_distribution<Rational>(q3, sq, Word{1, 1, 1}) ==
        multi_constants(t, Word{1, 1, 1}));

  for (const char* spec : {"cycle(5)", "hypercube(3)", "complete(4)", "path(4)"}) {
    const auto g = gen(spec);
    const SphereTable st(g);
    for (const auto& w : all_words_up_to(st.index_size(), 3)) {
      std::vector<double> got;
      try {
        got = path_sum_distribution<double>(g, st, w);
      } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::EmptySphere);
        continue;
      }
      const auto want = oracle::path_sums(g, w);
      for (Index m = 0; m < got.size(); ++m) CHECK(std::abs(got[m] - want[m]) <= 1e-13);
    }
  }
}

TEST_CASE("path sums guard the window boundary and the path cap") {
  const auto w = gen("line_window(4)");
  const SphereTable s(w);
  CHECK_NOTHROW(path_sum_distribution<Rational>(w, s, Word{2, 2}));
  CHECK_THROWS_AS(path_sum_distribution<Rational>(w, s, Word{3, 2}), Error);
  const auto q3 = gen("hypercube(3)");
  try {
    path_sum_distribution<double>(q3, SphereTable(q3), Word{1, 1, 1}, 5);
    FAIL("expected PathCapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PathCapExceeded);
  }
}

TEST_CASE("transition matrices of the 4-cycle") {
  const auto t = wildberger_tensor(gen("cycle(4)")).to_double();
  const auto p = transition_family(t);
  Eigen::MatrixXd p1(3, 3), p2(3, 3);
  p1 << 0, 1, 0, 0.5, 0, 0.5, 0, 1, 0;
  p2 << 0, 0, 1, 0, 1, 0, 1, 0, 0;
  CHECK((p[1] - p1).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p[2] - p2).cwiseAbs().maxCoeff() == 0.0);
  CHECK((p[0] - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXd lhs = p[1] * p[1];
  const Eigen::MatrixXd rhs = 0.5 * p[0] + 0.5 * p[2];
  CHECK((lhs - rhs).cwiseAbs().maxCoeff() <= 1e-15);
  for (Index a = 0; a < 3; ++a) {
    CHECK((p[a].rowwise().sum() - Eigen::VectorXd::Ones(3)).cwiseAbs().maxCoeff() <= tol::prob);
    for (Index b = 0; b < 3; ++b) CHECK((p[a] * p[b] - p[b] * p[a]).cwiseAbs().maxCoeff() <= tol::assoc);
  }
}
