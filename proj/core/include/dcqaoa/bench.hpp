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
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dcqaoa/dc_qaoa.hpp"
#include "dcqaoa/graph.hpp"
#include "dcqaoa/report.hpp"

namespace dcqaoa {

struct HarnessOptions {
  /// When false every wall-clock field is written as 0 so output is
  /// byte-reproducible.
  bool timing = true;
  /// Worker threads for sweep/compare rows; 0 means DCQAOA_THREADS or the
  /// hardware concurrency.
  std::size_t threads = 0;
  /// Also sample plain QAOA on the whole graph and report KL against it
  /// (only when the graph fits the simulator).
  bool kl_reference = false;
  /// Local-search restarts used to strengthen best-of-suite references.
  std::size_t local_search_restarts = 200;
};

std::size_t resolve_thread_count(std::size_t requested);

/// Brute force when the graph fits the exhaustive limit, otherwise the best
/// of greedy local search and `candidate_cuts`.
ReferenceOptimum reference_optimum(const Graph& g, std::uint64_t seed,
                                   const std::vector<std::size_t>& candidate_cuts,
                                   std::size_t local_search_restarts = 200);

/// Runs dc_qaoa and gathers every metric.  Propagates solver errors.
RunReport run_solve(const Graph& g, const DcConfig& cfg, const HarnessOptions& options = {});

enum class SweepAxis { kK, kT, kS, kP };
std::optional<SweepAxis> parse_sweep_axis(const std::string& name);
std::string to_string(SweepAxis axis);
/// Copy of `base` with the axis parameter set to `value`.
DcConfig with_axis(DcConfig base, SweepAxis axis, std::uint64_t value);

inline constexpr int kSweepCsvVersion = 1;
inline constexpr int kCompareCsvVersion = 1;

struct SweepRow {
  std::string graph;
  SweepAxis axis = SweepAxis::kK;
  std::uint64_t value = 0;
  std::size_t repeat = 0;
  std::uint64_t seed = 0;
  double nrl = 0.0;
  double expectation_value = 0.0;
  double ar_expectation = 0.0;
  double ar_best_sampled = 0.0;
  std::size_t best_cut = 0;
  std::size_t reference_cut = 0;
  std::string reference_method;
  double runtime_seconds = 0.0;
  std::string error;  // empty on success
};

/// One row per (value, repeat).  Repeat r uses seed base.seed + r.  Failed
/// rows keep their error text and the sweep continues.
std::vector<SweepRow> run_sweep(const std::string& graph_name, const Graph& g, SweepAxis axis,
                                const std::vector<std::uint64_t>& values, std::size_t repeats,
                                const DcConfig& base, const HarnessOptions& options = {});

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

struct CompareRow {
  std::string graph;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t dc_best_cut = 0;
  double dc_ar_best_sampled = 0.0;
  double dc_ar_expectation = 0.0;
  double dc_runtime_seconds = 0.0;
  std::uint64_t rs_budget = 0;
  std::size_t rs_best_cut = 0;
  double rs_ar = 0.0;
  double rs_runtime_seconds = 0.0;
  std::size_t ls_best_cut = 0;
  std::size_t reference_cut = 0;
  std::string reference_method;
  std::string error;
};

struct CompareSummary {
  std::size_t graphs = 0;
  std::size_t failed = 0;
  double mean_dc_ar = 0.0;
  double mean_rs_ar = 0.0;
};

/// DC-QAOA against random search with an evaluation-fair budget of
/// s * (number of recursion nodes), plus greedy local search as an extra
/// reference.  Throws ContractError on an empty list.
std::vector<CompareRow> run_compare(const std::vector<std::pair<std::string, Graph>>& graphs,
                                    const DcConfig& cfg, const HarnessOptions& options = {});

CompareSummary summarize(const std::vector<CompareRow>& rows);
void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows);

/// Sizes of the default comparison suite.
inline constexpr std::size_t kSuiteSizes[] = {16, 24, 32, 40, 48, 56, 64};

inline constexpr double kSuiteMeanDegree = 3.5;

/// Seven connected sparse G(n, p) graphs with expected mean degree
/// `kSuiteMeanDegree`.
std::vector<std::pair<std::string, Graph>> default_comparison_suite(std::uint64_t seed = 1);

}  // namespace dcqaoa
