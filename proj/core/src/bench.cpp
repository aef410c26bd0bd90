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

#include "dcqaoa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <thread>

#include "dcqaoa/baselines.hpp"
#include "dcqaoa/errors.hpp"
#include "dcqaoa/qaoa.hpp"
#include "dcqaoa/qsr.hpp"
#include "dcqaoa/random.hpp"

namespace dcqaoa {

namespace {

using Clock = std::chrono::steady_clock;

// Runs job(i) for i in [0, count) on up to `threads` workers.  Each job
// writes only its own slot, so results do not depend on scheduling.
template <typename Job>
void parallel_for(std::size_t count, std::size_t threads, Job job) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  pool.reserve(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) job(i);
    });
  }
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// CSV fields never contain quotes except inside error messages.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

double ratio(std::size_t achieved, std::size_t optimum) {
  return optimum == 0 ? 1.0 : static_cast<double>(achieved) / static_cast<double>(optimum);
}

}  // namespace

std::size_t resolve_thread_count(std::size_t requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("DCQAOA_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

ReferenceOptimum reference_optimum(const Graph& g, std::uint64_t seed,
                                   const std::vector<std::size_t>& candidate_cuts,
                                   std::size_t local_search_restarts) {
  if (g.node_count() <= kDefaultExhaustiveLimit) {
    return {brute_force_maxcut(g).max_cut, "brute_force", true};
  }
  std::size_t best = greedy_local_search(g, mix_seed(seed, 0x10ca1), local_search_restarts).best_cut;
  for (std::size_t c : candidate_cuts) best = std::max(best, c);
  return {best, "best_of_suite", false};
}

RunReport run_solve(const Graph& g, const DcConfig& cfg, const HarnessOptions& options) {
  const auto start = Clock::now();
  DcResult result = solve_dc_qaoa(g, cfg);
  const double runtime = std::chrono::duration<double>(Clock::now() - start).count();

  RunReport report;
  report.graph_hash = graph_hash(g);
  report.nodes = g.node_count();
  report.edges = g.edge_count();
  report.config = cfg;
  report.metrics.best_cut = best_sampled_cut(g, result.solution);
  report.metrics.best_assignment = best_sampled_assignment(g, result.solution);
  report.reference = reference_optimum(g, cfg.seed, {report.metrics.best_cut}, options.local_search_restarts);
  const auto optimum = report.reference.max_cut;
  report.metrics.expectation_value = expectation_value(g, result.solution);
  report.metrics.ar_expectation = approximation_ratio(g, result.solution, RatioMode::kExpectation, optimum);
  report.metrics.ar_best_sampled = approximation_ratio(g, result.solution, RatioMode::kBestSampled, optimum);
  report.metrics.nrl = result.overall_nrl();
  report.metrics.runtime_seconds = options.timing ? runtime : 0.0;
  report.metrics.tree_size = result.tree_size();
  report.metrics.leaves = result.leaf_count();
  if (options.kl_reference && g.node_count() <= kMaxQubits) {
    QaoaOptions q;
    q.p = cfg.p;
    q.shots = cfg.s;
    q.seed = mix_seed(cfg.seed, 0xfa11);
    q.budget = cfg.budget;
    q.restarts = cfg.restarts;
    q.tolerance = cfg.tolerance;
    report.metrics.kl_divergence = kl_divergence(result.solution, qaoa_maxcut(g, q));
  }
  report.solution = std::move(result.solution);
  report.tree = TreeSummary::from(*result.tree);
  return report;
}

std::optional<SweepAxis> parse_sweep_axis(const std::string& name) {
  if (name == "k") return SweepAxis::kK;
  if (name == "t") return SweepAxis::kT;
  if (name == "s") return SweepAxis::kS;
  if (name == "p") return SweepAxis::kP;
  return std::nullopt;
}

std::string to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kK: return "k";
    case SweepAxis::kT: return "t";
    case SweepAxis::kS: return "s";
    case SweepAxis::kP: return "p";
  }
  return "?";
}

DcConfig with_axis(DcConfig base, SweepAxis axis, std::uint64_t value) {
  switch (axis) {
    case SweepAxis::kK: base.k = value; break;
    case SweepAxis::kT: base.t = value; break;
    case SweepAxis::kS: base.s = value; break;
    case SweepAxis::kP: base.p = value; break;
  }
  return base;
}

std::vector<SweepRow> run_sweep(const std::string& graph_name, const Graph& g, SweepAxis axis,
                                const std::vector<std::uint64_t>& values, std::size_t repeats,
                                const DcConfig& base, const HarnessOptions& options) {
  if (values.empty()) throw ContractError("sweep needs at least one axis value");
  if (repeats < 1) throw ContractError("sweep needs at least one repeat");
  std::vector<SweepRow> rows(values.size() * repeats);
  std::vector<std::optional<SolutionMap>> solutions(rows.size());

  parallel_for(rows.size(), resolve_thread_count(options.threads), [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.graph = graph_name;
    row.axis = axis;
    row.value = values[i / repeats];
    row.repeat = i % repeats;
    row.seed = base.seed + row.repeat;
    try {
      DcConfig cfg = with_axis(base, axis, row.value);
      cfg.seed = row.seed;
      const auto start = Clock::now();
      DcResult result = solve_dc_qaoa(g, cfg);
      const double runtime = std::chrono::duration<double>(Clock::now() - start).count();
      row.runtime_seconds = options.timing ? runtime : 0.0;
      row.nrl = result.overall_nrl();
      row.expectation_value = expectation_value(g, result.solution);
      row.best_cut = best_sampled_cut(g, result.solution);
      solutions[i] = std::move(result.solution);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });

  // One reference for the whole sweep so every row shares a denominator.
  std::vector<std::size_t> found;
  for (const auto& row : rows) {
    if (row.error.empty()) found.push_back(row.best_cut);
  }
  const ReferenceOptimum ref = reference_optimum(g, base.seed, found, options.local_search_restarts);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SweepRow& row = rows[i];
    row.reference_cut = ref.max_cut;
    row.reference_method = ref.method;
    if (!row.error.empty()) continue;
    row.ar_best_sampled = ratio(row.best_cut, ref.max_cut);
    row.ar_expectation = ref.max_cut == 0 ? 1.0 : row.expectation_value / static_cast<double>(ref.max_cut);
  }
  return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "v,graph,axis,value,repeat,seed,nrl,ev,ar_expectation,ar_best_sampled,best_cut,"
         "reference_cut,reference_method,runtime_s,status\n";
  for (const auto& r : rows) {
    out << kSweepCsvVersion << ',' << csv_field(r.graph) << ',' << to_string(r.axis) << ',' << r.value
        << ',' << r.repeat << ',' << r.seed << ',' << fixed(r.nrl) << ',' << fixed(r.expectation_value)
        << ',' << fixed(r.ar_expectation) << ',' << fixed(r.ar_best_sampled) << ',' << r.best_cut << ','
        << r.reference_cut << ',' << r.reference_method << ',' << fixed(r.runtime_seconds) << ','
        << (r.error.empty() ? std::string("ok") : csv_field("error: " + r.error)) << '\n';
  }
}

std::vector<CompareRow> run_compare(const std::vector<std::pair<std::string, Graph>>& graphs,
                                    const DcConfig& cfg, const HarnessOptions& options) {
  if (graphs.empty()) throw ContractError("compare needs at least one graph");
  std::vector<CompareRow> rows(graphs.size());
  parallel_for(rows.size(), resolve_thread_count(options.threads), [&](std::size_t i) {
    const auto& [name, g] = graphs[i];
    CompareRow& row = rows[i];
    row.graph = name;
    row.nodes = g.node_count();
    row.edges = g.edge_count();
    std::optional<SolutionMap> solution;
    try {
      const auto start = Clock::now();
      DcResult result = solve_dc_qaoa(g, cfg);
      const double runtime = std::chrono::duration<double>(Clock::now() - start).count();
      row.dc_runtime_seconds = options.timing ? runtime : 0.0;
      row.dc_best_cut = best_sampled_cut(g, result.solution);
      row.rs_budget = cfg.s * result.tree_size();
      solution = std::move(result.solution);
    } catch (const std::exception& e) {
      row.error = e.what();
      row.rs_budget = cfg.s;
    }
    const BaselineResult rs = random_search(g, row.rs_budget, mix_seed(cfg.seed, 0x7a2d));
    row.rs_best_cut = rs.best_cut;
    row.rs_runtime_seconds = options.timing ? rs.elapsed_seconds : 0.0;
    row.ls_best_cut =
        greedy_local_search(g, mix_seed(cfg.seed, 0x10ca1), options.local_search_restarts).best_cut;

    std::vector<std::size_t> found{row.rs_best_cut, row.ls_best_cut};
    if (solution) found.push_back(row.dc_best_cut);
    const ReferenceOptimum ref = reference_optimum(g, cfg.seed, found, options.local_search_restarts);
    row.reference_cut = ref.max_cut;
    row.reference_method = ref.method;
    row.rs_ar = ratio(row.rs_best_cut, ref.max_cut);
    if (solution) {
      row.dc_ar_best_sampled = ratio(row.dc_best_cut, ref.max_cut);
      row.dc_ar_expectation =
          ref.max_cut == 0 ? 1.0 : expectation_value(g, *solution) / static_cast<double>(ref.max_cut);
    }
  });
  return rows;
}

CompareSummary summarize(const std::vector<CompareRow>& rows) {
  CompareSummary s;
  for (const auto& r : rows) {
    ++s.graphs;
    if (!r.error.empty()) {
      ++s.failed;
      continue;
    }
    s.mean_dc_ar += r.dc_ar_best_sampled;
    s.mean_rs_ar += r.rs_ar;
  }
  const std::size_t ok = s.graphs - s.failed;
  if (ok > 0) {
    s.mean_dc_ar /= static_cast<double>(ok);
    s.mean_rs_ar /= static_cast<double>(ok);
  }
  return s;
}

void write_compare_csv(std::ostream& out, const std::vector<CompareRow>& rows) {
  out << "v,graph,nodes,edges,dc_best_cut,dc_ar_best_sampled,dc_ar_expectation,dc_runtime_s,"
         "rs_budget,rs_best_cut,rs_ar,rs_runtime_s,ls_best_cut,reference_cut,reference_method,status\n";
  for (const auto& r : rows) {
    out << kCompareCsvVersion << ',' << csv_field(r.graph) << ',' << r.nodes << ',' << r.edges << ','
        << r.dc_best_cut << ',' << fixed(r.dc_ar_best_sampled) << ',' << fixed(r.dc_ar_expectation)
        << ',' << fixed(r.dc_runtime_seconds) << ',' << r.rs_budget << ',' << r.rs_best_cut << ','
        << fixed(r.rs_ar) << ',' << fixed(r.rs_runtime_seconds) << ',' << r.ls_best_cut << ','
        << r.reference_cut << ',' << r.reference_method << ','
        << (r.error.empty() ? std::string("ok") : csv_field("error: " + r.error)) << '\n';
  }
  const CompareSummary s = summarize(rows);
  out << kCompareCsvVersion << ",MEAN,,,," << fixed(s.mean_dc_ar) << ",,,,," << fixed(s.mean_rs_ar)
      << ",,,,," << (s.failed == 0 ? "ok" : std::to_string(s.failed) + " failed")
      << '\n';
}

std::vector<std::pair<std::string, Graph>> default_comparison_suite(std::uint64_t seed) {
  std::vector<std::pair<std::string, Graph>> suite;
  for (std::size_t n : kSuiteSizes) {
    const double p = kSuiteMeanDegree / static_cast<double>(n - 1);
    suite.emplace_back("er_n" + std::to_string(n), random_graph(n, p, mix_seed(seed, n)));
  }
  return suite;
}

}  // namespace dcqaoa
