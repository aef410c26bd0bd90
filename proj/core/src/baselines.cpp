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

#include "dcqaoa/baselines.hpp"

#include <chrono>

#include "dcqaoa/errors.hpp"
#include "dcqaoa/random.hpp"

namespace dcqaoa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

}  // namespace

BaselineResult random_search(const Graph& g, std::uint64_t budget, std::uint64_t seed) {
  if (budget < 1) throw ContractError("random search budget must be at least 1");
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  BaselineResult result;
  Rng rng(seed);
  std::string current(n, '0');
  for (std::uint64_t i = 0; i < budget; ++i) {
    for (std::size_t j = 1; j < n; ++j) current[j] = (rng() >> 63) ? '1' : '0';
    const std::size_t cut = cut_size(g, current);
    ++result.evaluations;
    if (i == 0 || cut > result.best_cut) {
      result.best_cut = cut;
      result.best_assignment = current;
    }
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

BaselineResult greedy_local_search(const Graph& g, std::uint64_t seed, std::size_t restarts) {
  const auto start = Clock::now();
  const std::size_t n = g.node_count();
  BaselineResult result;
  Rng rng(seed);
  std::vector<std::uint8_t> side(n);
  const std::size_t runs = std::max<std::size_t>(restarts, 1);
  for (std::size_t r = 0; r < runs; ++r) {
    for (auto& b : side) b = static_cast<std::uint8_t>(rng() >> 63);
    // gain[v]: change in cut when v flips = (same-side neighbours) - (other-side neighbours)
    std::vector<long long> gain(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t w : g.neighbors(v)) gain[v] += side[v] == side[w] ? 1 : -1;
    }
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t v = 0; v < n; ++v) {
        ++result.evaluations;
        if (gain[v] <= 0) continue;
        side[v] ^= 1U;
        gain[v] = -gain[v];
        for (std::size_t w : g.neighbors(v)) gain[w] += side[v] == side[w] ? 2 : -2;
        improved = true;
      }
    }
    std::string assignment(n, '0');
    for (std::size_t v = 0; v < n; ++v) assignment[v] = side[v] ? '1' : '0';
    const std::size_t cut = cut_size(g, assignment);
    if (r == 0 || cut > result.best_cut || (cut == result.best_cut && assignment < result.best_assignment)) {
      result.best_cut = cut;
      result.best_assignment = std::move(assignment);
    }
  }
  result.elapsed_seconds = seconds_since(start);
  return result;
}

}  // namespace dcqaoa
