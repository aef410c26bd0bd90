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
#include <optional>
#include <string>
#include <vector>

#include "dcqaoa/dc_qaoa.hpp"
#include "dcqaoa/graph.hpp"
#include "dcqaoa/solution_map.hpp"

namespace dcqaoa {

inline constexpr const char* kReportSchema = "dcqaoa-report/1";

/// Copyable snapshot of a PartitionNode.
struct TreeSummary {
  std::vector<NodeId> nodes;
  std::vector<NodeId> separator;
  double nrl = 1.0;
  std::vector<TreeSummary> children;

  static TreeSummary from(const PartitionNode& node);
  friend bool operator==(const TreeSummary&, const TreeSummary&) = default;
};

/// Denominator for approximation ratios.  `exact` is false when the value
/// is the best cut found by any method in the run, i.e. a lower bound on the
/// true optimum.
struct ReferenceOptimum {
  std::size_t max_cut = 0;
  std::string method;  // "brute_force" or "best_of_suite"
  bool exact = false;

  friend bool operator==(const ReferenceOptimum&, const ReferenceOptimum&) = default;
};

struct RunMetrics {
  std::size_t best_cut = 0;
  std::string best_assignment;
  double expectation_value = 0.0;
  double ar_expectation = 0.0;
  double ar_best_sampled = 0.0;
  double nrl = 1.0;
  std::optional<double> kl_divergence;
  double runtime_seconds = 0.0;
  std::size_t tree_size = 1;
  std::size_t leaves = 1;

  friend bool operator==(const RunMetrics&, const RunMetrics&) = default;
};

struct RunReport {
  std::string schema = kReportSchema;
  std::string graph_hash;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  DcConfig config;
  ReferenceOptimum reference;
  RunMetrics metrics;
  SolutionMap solution;
  TreeSummary tree;

  friend bool operator==(const RunReport& a, const RunReport& b);
};

std::string to_json(const RunReport& report);
RunReport parse_run_report(const std::string& json);

/// {"nodes": [...], "counts": {"0101": 12, ...}} with entries in map order.
std::string to_json(const SolutionMap& m);
SolutionMap parse_solution_map(const std::string& json);

}  // namespace dcqaoa
