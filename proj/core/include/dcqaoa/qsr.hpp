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

#include <optional>
#include <string>
#include <string_view>

#include "dcqaoa/graph.hpp"
#include "dcqaoa/solution_map.hpp"

namespace dcqaoa {

/// How two compatible counts merge into one.
enum class QsrScheme {
  kMin,     // min(c1, c2)
  kMul,     // c1 * c2
  kSum,     // c1 + c2
  kMinXMul  // min(c1, c2) * c1 * c2
};

std::string to_string(QsrScheme scheme);
std::optional<QsrScheme> parse_qsr_scheme(std::string_view name);

/// Throws ContractError if the result does not fit in a Count.
Count apply_scheme(QsrScheme scheme, Count c1, Count c2);

/// Merges every pair (a1, a2) from m1 x m2 that agrees on all nodes common
/// to g1 and g2.  The merged assignment covers the sorted union of both node
/// sets and takes a node's bit from a1 when the node is in g1.  Output is
/// sorted; it is empty when no pair is compatible.
///
/// Throws ContractError when the graphs share no node or a map is not keyed
/// on its graph's node set.
SolutionMap combine(const Graph& g1, const Graph& g2, const SolutionMap& m1, const SolutionMap& m2,
                    QsrScheme scheme);

/// Keeps the multiset of counts but hands the largest count to the
/// assignment with the largest cut, the second largest to the next, and so
/// on.  Equal cuts are ordered lexicographically.
SolutionMap rerank_by_cut(const Graph& g, const SolutionMap& m);

inline constexpr double kKlSmoothing = 1e-9;

/// KL(P || Q) with P from `reconstructed` and Q from `reference`, both
/// normalised over their union support with additive smoothing.
double kl_divergence(const SolutionMap& reconstructed, const SolutionMap& reference,
                     double smoothing = kKlSmoothing);

}  // namespace dcqaoa
