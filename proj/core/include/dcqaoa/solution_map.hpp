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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dcqaoa/graph.hpp"

namespace dcqaoa {

using Count = std::uint64_t;

struct SolutionEntry {
  std::string assignment;
  Count count = 0;

  friend bool operator==(const SolutionEntry&, const SolutionEntry&) = default;
};

/// Sampled cut assignments with their counts, keyed on a sorted node set.
///
/// Assignments all have length `node_set().size()` and are unique.  After
/// `sort()` entries are in non-increasing count order, ties broken by the
/// lexicographically smaller assignment.
class SolutionMap {
 public:
  SolutionMap() = default;
  explicit SolutionMap(std::vector<NodeId> node_set);

  /// Validating constructor; throws ContractError on bad lengths, characters
  /// or duplicate keys.
  SolutionMap(std::vector<NodeId> node_set, std::vector<SolutionEntry> entries);

  static SolutionMap for_graph(const Graph& g) { return SolutionMap(g.nodes()); }

  const std::vector<NodeId>& node_set() const noexcept { return node_set_; }
  const std::vector<SolutionEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  std::size_t width() const noexcept { return node_set_.size(); }

  /// Appends a new key.  Throws ContractError if the key exists already.
  void insert(std::string assignment, Count count);

  /// Adds `count` to an existing key or inserts it.
  void accumulate(std::string_view assignment, Count count);

  std::optional<Count> find(std::string_view assignment) const;

  /// Sum of all counts (saturates at the maximum Count).
  Count total() const noexcept;

  SolutionMap& sort();
  bool is_sorted() const;

  friend bool operator==(const SolutionMap&, const SolutionMap&) = default;

 private:
  void check_assignment(std::string_view assignment) const;
  std::ptrdiff_t index_of(std::string_view assignment) const;

  std::vector<NodeId> node_set_;
  std::vector<SolutionEntry> entries_;
};

/// Count-weighted mean cut size.  Throws ContractError when the map is empty
/// or its node set differs from the graph's.
double expectation_value(const Graph& g, const SolutionMap& m);

/// Largest cut among the sampled assignments.
std::size_t best_sampled_cut(const Graph& g, const SolutionMap& m);

/// Assignment achieving `best_sampled_cut` (lexicographically smallest on ties).
std::string best_sampled_assignment(const Graph& g, const SolutionMap& m);

enum class RatioMode { kExpectation, kBestSampled };

/// Ratio against `known_optimum` when given, else against brute force.
/// Graphs without edges have ratio 1.  Throws RefusalError when no optimum
/// is known and the graph is too large for brute force.
double approximation_ratio(const Graph& g, const SolutionMap& m, RatioMode mode,
                           std::optional<std::size_t> known_optimum = std::nullopt);

}  // namespace dcqaoa
