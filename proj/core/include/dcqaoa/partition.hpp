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
#include <functional>
#include <vector>

#include "dcqaoa/graph.hpp"

namespace dcqaoa {

/// A path-shaped node separator and the two overlapping subgraphs it induces.
///
/// Separator nodes belong to both subgraphs.  Edges are split without
/// overlap: an edge touching a non-separator node goes with that node's side,
/// and edges between two separator nodes go to `first`.
struct SeparationResult {
  std::vector<NodeId> separator;
  Graph first;
  Graph second;
};

/// Calls `visit` on every simple path with exactly `length` nodes, one
/// orientation per path (first label < last label), in lexicographic order of
/// the label sequence.  Stops early when `visit` returns false.
void for_each_path(const Graph& g, std::size_t length,
                   const std::function<bool(const std::vector<NodeId>&)>& visit);

std::vector<std::vector<NodeId>> enumerate_paths(const Graph& g, std::size_t length);

/// Components of `g` after deleting `removed` and its incident edges.
std::vector<std::vector<NodeId>> components_without(const Graph& g,
                                                    const std::vector<NodeId>& removed);

/// Naive large-graph partitioning.  Tries separator paths of 1, 2, ..., k-1
/// nodes and accepts the first whose removal leaves exactly two components.
///
/// Throws ContractError when g is disconnected or |g| <= k, ConnectivityError
/// when no separator shorter than k exists, ProgressError if a side fails to
/// shrink.
SeparationResult nlgp(const Graph& g, std::size_t k);

/// Node redundancy level: total nodes over all parts divided by |original|.
double nrl(const Graph& original, const std::vector<Graph>& parts);

}  // namespace dcqaoa
