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

// Serial against OpenMP timings for the scan kernels. The second argument of
// every benchmark selects the path: 0 serial, 1 parallel.
#include <benchmark/benchmark.h>

#include <algorithm>

#include "hyperwalk/fixtures.hpp"
#include "hyperwalk/graph_walk.hpp"
#include "hyperwalk/kernels/algebra.hpp"
#include "hyperwalk/kernels/graph.hpp"
#include "hyperwalk/kernels/oqrw.hpp"
#include "hyperwalk/verify.hpp"

using namespace hyperwalk;

namespace {

kernels::Exec exec_of(const benchmark::State& st) {
  return st.range(1) == 0 ? kernels::Exec::Serial : kernels::Exec::Parallel;
}

PointedGraph cube(Index n) {
  return generate_graph(GraphSpec::parse("hypercube(" + std::to_string(n) + ")"));
}

void BM_Associativity(benchmark::State& st) {
  const auto t = fixtures::z_window(st.range(0)).tensor();
  const auto exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::associativity_scan(t, tol::assoc, exec));
}

void BM_HB(benchmark::State& st) {
  const auto t = fixtures::s3_group().tensor();
  const auto r = realize(t, st.range(0), random_isometries(t, st.range(0), 1));
  const auto exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::hb_scan(r.family, t, tol::hb, exec));
}

void BM_AllPairsBfs(benchmark::State& st) {
  const auto g = cube(st.range(0));
  const auto exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(kernels::all_pairs_bfs(g.adjacency(), exec));
}

void BM_DistanceRegular(benchmark::State& st) {
  const auto g = cube(st.range(0));
  const auto dist = kernels::all_pairs_bfs(g.adjacency(), kernels::Exec::Serial);
  const auto diameter = static_cast<Index>(*std::max_element(dist.begin(), dist.end()));
  const auto exec = exec_of(st);
  for (auto _ : st)
    benchmark::DoNotOptimize(kernels::distance_regular_scan(dist, g.vertex_count(), diameter, exec));
}

void BM_PathSumWords(benchmark::State& st) {
  const auto g = cube(st.range(0));
  const auto exec = exec_of(st);
  for (auto _ : st) benchmark::DoNotOptimize(verify_path_sums(g, 3, Arithmetic::Float, exec));
}

void BM_MixtureWords(benchmark::State& st) {
  const auto t = fixtures::c4().tensor();
  const auto r = realize(t, st.range(0), random_isometries(t, st.range(0), 2));
  const auto exec = exec_of(st);
  for (auto _ : st)
    benchmark::DoNotOptimize(verify_mixture_factorization(r.family, t, 5, 8, 3, 10 * tol::prob, exec));
}

}  // namespace

BENCHMARK(BM_Associativity)->ArgsProduct({{24, 48}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HB)->ArgsProduct({{4, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AllPairsBfs)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DistanceRegular)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PathSumWords)->ArgsProduct({{4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MixtureWords)->ArgsProduct({{2, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
