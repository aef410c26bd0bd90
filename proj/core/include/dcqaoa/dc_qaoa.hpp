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
#include <memory>
#include <vector>

#include "dcqaoa/graph.hpp"
#include "dcqaoa/qsr.hpp"
#include "dcqaoa/solution_map.hpp"

namespace dcqaoa {

struct DcConfig {
  std::size_t p = 3;            // circuit depth
  std::size_t t = 20;           // entries kept per level
  std::uint64_t s = 1000;       // shots, and the per-level rescale target
  std::size_t k = 8;            // qubit budget
  QsrScheme scheme = QsrScheme::kMinXMul;
  std::uint64_t seed = 0;
  std::size_t budget = 20;      // optimizer evaluations per restart, per subproblem
  std::size_t restarts = 1;
  double tolerance = 1e-4;

  /// Throws ContractError unless k >= 2, t >= 1, s >= 1, p >= 1.
  void validate() const;
};

/// One node of the recursion.  Leaves were solved directly by QAOA.
struct PartitionNode {
  std::vector<NodeId> nodes;
  std::vector<NodeId> separator;          // empty for leaves
  double nrl = 1.0;                       // of this split, 1 for leaves
  std::size_t depth = 0;
  std::vector<std::unique_ptr<PartitionNode>> children;

  bool is_leaf() const noexcept { return children.empty(); }
};

struct DcResult {
  SolutionMap solution;
  std::unique_ptr<PartitionNode> tree;

  /// Sum of leaf sizes over |g|.
  double overall_nrl() const;
  std::size_t leaf_count() const;
  std::size_t tree_size() const;
};

/// Every count multiplied by the assignment length.
SolutionMap weight_map(const SolutionMap& m);

/// The first min(t, |m|) entries with zero counts dropped.  Expects a sorted map.
SolutionMap abridge(const SolutionMap& m, std::size_t t);

/// Counts become floor(s * v / total); entries reaching 0 are dropped.
/// Throws ContractError on a zero total.
SolutionMap rescale(const SolutionMap& m, std::uint64_t s);

/// Recursive divide-and-conquer QAOA.
///
/// Graphs within the qubit budget are solved by `qaoa_maxcut`.  Larger ones
/// are split by `nlgp`, both halves are solved recursively, weighted by node
/// count and merged with `combine`.  Every level then re-ranks by cut,
/// keeps the top t entries and rescales to s.  Child seeds are derived from
/// the master seed and the child's node list.
DcResult solve_dc_qaoa(const Graph& g, const DcConfig& cfg);

SolutionMap dc_qaoa(const Graph& g, const DcConfig& cfg);

}  // namespace dcqaoa
