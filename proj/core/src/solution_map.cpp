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

#include "dcqaoa/solution_map.hpp"

#include <algorithm>
#include <limits>

#include "dcqaoa/errors.hpp"

namespace dcqaoa {

SolutionMap::SolutionMap(std::vector<NodeId> node_set) : node_set_(std::move(node_set)) {
  if (!std::is_sorted(node_set_.begin(), node_set_.end()) ||
      std::adjacent_find(node_set_.begin(), node_set_.end()) != node_set_.end()) {
    throw ContractError("solution map node set must be strictly ascending");
  }
}

SolutionMap::SolutionMap(std::vector<NodeId> node_set, std::vector<SolutionEntry> entries)
    : SolutionMap(std::move(node_set)) {
  for (const auto& e : entries) check_assignment(e.assignment);
  std::vector<std::string_view> keys;
  keys.reserve(entries.size());
  for (const auto& e : entries) keys.push_back(e.assignment);
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) {
    throw ContractError("duplicate assignment in solution map");
  }
  entries_ = std::move(entries);
}

void SolutionMap::check_assignment(std::string_view assignment) const {
  if (assignment.size() != node_set_.size()) {
    throw ContractError("assignment '" + std::string(assignment) + "' has length " +
                        std::to_string(assignment.size()) + ", expected " +
                        std::to_string(node_set_.size()));
  }
  if (assignment.find_first_not_of("01") != std::string_view::npos) {
    throw ContractError("assignment '" + std::string(assignment) + "' is not a bitstring");
  }
}

std::ptrdiff_t SolutionMap::index_of(std::string_view assignment) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const SolutionEntry& e) { return e.assignment == assignment; });
  return it == entries_.end() ? -1 : it - entries_.begin();
}

void SolutionMap::insert(std::string assignment, Count count) {
  check_assignment(assignment);
  if (index_of(assignment) >= 0) throw ContractError("duplicate assignment '" + assignment + "'");
  entries_.push_back({std::move(assignment), count});
}

void SolutionMap::accumulate(std::string_view assignment, Count count) {
  check_assignment(assignment);
  if (auto i = index_of(assignment); i >= 0) {
    entries_[static_cast<std::size_t>(i)].count += count;
  } else {
    entries_.push_back({std::string(assignment), count});
  }
}

std::optional<Count> SolutionMap::find(std::string_view assignment) const {
  if (auto i = index_of(assignment); i >= 0) return entries_[static_cast<std::size_t>(i)].count;
  return std::nullopt;
}

Count SolutionMap::total() const noexcept {
  Count sum = 0;
  for (const auto& e : entries_) {
    if (e.count > std::numeric_limits<Count>::max() - sum) return std::numeric_limits<Count>::max();
    sum += e.count;
  }
  return sum;
}

namespace {

bool entry_before(const SolutionEntry& a, const SolutionEntry& b) {
  if (a.count != b.count) return a.count > b.count;
  return a.assignment < b.assignment;
}

}  // namespace

SolutionMap& SolutionMap::sort() {
  std::sort(entries_.begin(), entries_.end(), entry_before);
  return *this;
}

bool SolutionMap::is_sorted() const {
  return std::is_sorted(entries_.begin(), entries_.end(), entry_before);
}

namespace {

void check_keyed_on(const Graph& g, const SolutionMap& m) {
  if (m.node_set() != g.nodes()) throw ContractError("solution map is not keyed on the graph's nodes");
}

}  // namespace

double expectation_value(const Graph& g, const SolutionMap& m) {
  check_keyed_on(g, m);
  long double weighted = 0.0L;
  long double total = 0.0L;
  for (const auto& e : m.entries()) {
    weighted += static_cast<long double>(e.count) * static_cast<long double>(cut_size(g, e.assignment));
    total += static_cast<long double>(e.count);
  }
  if (m.empty() || total <= 0.0L) throw ContractError("expectation of an empty solution map");
  return static_cast<double>(weighted / total);
}

std::size_t best_sampled_cut(const Graph& g, const SolutionMap& m) {
  check_keyed_on(g, m);
  if (m.empty()) throw ContractError("best cut of an empty solution map");
  std::size_t best = 0;
  for (const auto& e : m.entries()) best = std::max(best, cut_size(g, e.assignment));
  return best;
}

std::string best_sampled_assignment(const Graph& g, const SolutionMap& m) {
  check_keyed_on(g, m);
  if (m.empty()) throw ContractError("best assignment of an empty solution map");
  const SolutionEntry* best = nullptr;
  std::size_t best_cut = 0;
  for (const auto& e : m.entries()) {
    const std::size_t c = cut_size(g, e.assignment);
    if (best == nullptr || c > best_cut || (c == best_cut && e.assignment < best->assignment)) {
      best = &e;
      best_cut = c;
    }
  }
  return best->assignment;
}

double approximation_ratio(const Graph& g, const SolutionMap& m, RatioMode mode,
                           std::optional<std::size_t> known_optimum) {
  const std::size_t optimum = known_optimum ? *known_optimum : brute_force_maxcut(g).max_cut;
  const double achieved = mode == RatioMode::kExpectation
                              ? expectation_value(g, m)
                              : static_cast<double>(best_sampled_cut(g, m));
  if (optimum == 0) return 1.0;
  return achieved / static_cast<double>(optimum);
}

}  // namespace dcqaoa
