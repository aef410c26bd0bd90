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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "dcqaoa/graph.hpp"

namespace dcqaoa {

struct BaselineResult {
  std::string best_assignment;
  std::size_t best_cut = 0;
  std::uint64_t evaluations = 0;
  double elapsed_seconds = 0.0;
};

/// Best of `budget` uniformly random assignments with position 0 fixed to '0'.
/// Draws come from one seeded stream, so a larger budget extends a smaller one.
BaselineResult random_search(const Graph& g, std::uint64_t budget, std::uint64_t seed);

/// Single-flip hill climbing from `restarts` random starts.  Each result is
/// 1-flip optimal.  `evaluations` counts accepted and rejected flip probes.
BaselineResult greedy_local_search(const Graph& g, std::uint64_t seed, std::size_t restarts = 20);

}  // namespace dcqaoa
