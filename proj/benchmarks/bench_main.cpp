// Copyright 2026 The dcqaoa Authors
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


#include <benchmark/benchmark.h>

#include "dcqaoa/bench.hpp"
#include "dcqaoa/dc_qaoa.hpp"
#include "dcqaoa/partition.hpp"
#include "dcqaoa/qaoa.hpp"
#include "dcqaoa/random.hpp"

namespace {

using namespace dcqaoa;

void BM_QaoaExpectation(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 0.5, 1);
  AnsatzParams params;
  for (int l = 0; l < 3; ++l) params.layers.push_back({0.7, 0.3});
  for (auto _ : state) benchmark::DoNotOptimize(qaoa_expectation(g, params));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_QaoaExpectation)->DenseRange(6, 16, 2);

void BM_QaoaMaxcut(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.5, 2);
  QaoaOptions q;
  q.budget = 20;
  q.restarts = 1;
  for (auto _ : state) benchmark::DoNotOptimize(qaoa_maxcut(g, q));
}
BENCHMARK(BM_QaoaMaxcut)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_DcQaoa(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, kSuiteMeanDegree / static_cast<double>(n - 1), mix_seed(1, n));
  for (auto _ : state) benchmark::DoNotOptimize(dc_qaoa(g, DcConfig{}));
}
BENCHMARK(BM_DcQaoa)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Nlgp(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Graph g = random_graph(n, 3.5 / static_cast<double>(n - 1), mix_seed(1, n));
  for (auto _ : state) benchmark::DoNotOptimize(nlgp(g, 8));
}
BENCHMARK(BM_Nlgp)->RangeMultiplier(2)->Range(16, 128);

void BM_BruteForce(benchmark::State& state) {
  const Graph g = random_graph(static_cast<std::size_t>(state.range(0)), 0.3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_maxcut(g));
}
BENCHMARK(BM_BruteForce)->DenseRange(12, 20, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
