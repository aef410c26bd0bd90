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

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dcqaoa/bench.hpp"
#include "dcqaoa/errors.hpp"
#include "dcqaoa/qsr.hpp"
#include "dcqaoa/report.hpp"

namespace dcqaoa::cli {

namespace {

struct SolverFlags {
  DcConfig cfg;
  std::string scheme = "minXmul";
  HarnessOptions harness;
  bool no_timing = false;

  void add_to(CLI::App& cmd) {
    cmd.add_option("--k", cfg.k, "Maximum qubit count per subproblem")->capture_default_str();
    cmd.add_option("--p", cfg.p, "QAOA circuit depth")->capture_default_str();
    cmd.add_option("--t", cfg.t, "Entries kept per recursion level")->capture_default_str();
    cmd.add_option("--s", cfg.s, "Shots and per-level rescale target")->capture_default_str();
    cmd.add_option("--scheme", scheme, "Reconstruction scheme: min, mul, sum, minXmul")
        ->capture_default_str();
    cmd.add_option("--seed", cfg.seed, "Master seed")->capture_default_str();
    cmd.add_option("--budget", cfg.budget, "Optimizer evaluations per restart")->capture_default_str();
    cmd.add_option("--restarts", cfg.restarts, "Optimizer restarts")->capture_default_str();
    cmd.add_option("--threads", harness.threads, "Worker threads (0: DCQAOA_THREADS or all cores)");
    cmd.add_flag("--no-timing", no_timing, "Write every runtime as 0 for reproducible output");
  }

  DcConfig resolved() const {
    DcConfig out = cfg;
    const auto parsed = parse_qsr_scheme(scheme);
    if (!parsed) throw ContractError("unknown scheme '" + scheme + "'");
    out.scheme = *parsed;
    out.validate();
    return out;
  }

  HarnessOptions options() const {
    HarnessOptions out = harness;
    out.timing = !no_timing;
    return out;
  }
};

// Writes to --out when given, else to the command's output stream.
void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot write '" + path + "'");
  file << text;
}

std::vector<std::uint64_t> parse_values(const std::string& spec) {
  // "5,6,7,8" or a range "5..8"
  std::vector<std::uint64_t> values;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    const auto lo = std::stoull(spec.substr(0, dots));
    const auto hi = std::stoull(spec.substr(dots + 2));
    if (hi < lo) throw ContractError("empty range '" + spec + "'");
    for (auto v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const auto v = std::stoull(item, &used);
    if (used != item.size()) throw ContractError("bad axis value '" + item + "'");
    values.push_back(v);
  }
  if (values.empty()) throw ContractError("no axis values given");
  return values;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Divide-and-conquer QAOA for graph MaxCut"};
  app.require_subcommand(1);

  // gen
  std::size_t gen_n = 10;
  double gen_prob = 0.3;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  std::string gen_suite;
  auto* gen = app.add_subcommand("gen", "Generate a connected Erdos-Renyi edge list");
  gen->add_option("--n", gen_n, "Node count")->capture_default_str();
  gen->add_option("--edge-prob", gen_prob, "Edge probability in (0, 1]")->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed")->capture_default_str();
  gen->add_option("--out", gen_out, "Output edge-list path");
  gen->add_option("--suite", gen_suite, "Write the default 7-graph comparison suite into this directory");

  // solve
  std::string solve_graph;
  std::string solve_out;
  bool solve_kl = false;
  SolverFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Run DC-QAOA on one graph and print a JSON report");
  solve->add_option("graph", solve_graph, "Edge-list file")->required();
  solve->add_option("--out", solve_out, "Write the report here instead of stdout");
  solve->add_flag("--kl", solve_kl, "Also report KL divergence against whole-graph QAOA sampling");
  solve_flags.add_to(*solve);

  // sweep
  std::string sweep_graph;
  std::string sweep_axis = "k";
  std::string sweep_values;
  std::size_t sweep_repeats = 1;
  std::string sweep_out;
  SolverFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Sensitivity sweep over one parameter, CSV output");
  sweep->add_option("graph", sweep_graph, "Edge-list file")->required();
  sweep->add_option("--axis", sweep_axis, "Parameter to vary: k, t, s or p")->capture_default_str();
  sweep->add_option("--values", sweep_values, "Comma list or lo..hi range")->required();
  sweep->add_option("--repeats", sweep_repeats, "Repeats per value (seeds seed..seed+repeats-1)")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "Write CSV here instead of stdout");
  sweep_flags.add_to(*sweep);

  // compare
  std::vector<std::string> compare_graphs;
  std::string compare_out;
  SolverFlags compare_flags;
  auto* compare = app.add_subcommand("compare", "DC-QAOA versus random search, CSV output");
  compare->add_option("graphs", compare_graphs, "Edge-list files");
  compare->add_option("--out", compare_out, "Write CSV here instead of stdout");
  compare_flags.add_to(*compare);

  // qsr
  std::vector<std::string> qsr_inputs;
  std::string qsr_scheme = "mul";
  std::string qsr_out;
  auto* qsr = app.add_subcommand("qsr", "Combine two subgraph solution maps");
  qsr->add_option("inputs", qsr_inputs, "G1.edges G2.edges M1.json M2.json")->expected(4)->required();
  qsr->add_option("--scheme", qsr_scheme, "min, mul, sum or minXmul")->capture_default_str();
  qsr->add_option("--out", qsr_out, "Write the combined map here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*gen) {
      if (!gen_suite.empty()) {
        std::filesystem::create_directories(gen_suite);
        for (const auto& [name, g] : default_comparison_suite(gen_seed)) {
          const auto path = (std::filesystem::path(gen_suite) / (name + ".edges")).string();
          write_edge_list_file(g, path);
          out << path << ": " << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
        }
        return kOk;
      }
      if (gen_out.empty()) {
        err << "gen: --out or --suite is required\n";
        return kInputError;
      }
      const Graph g = random_graph(gen_n, gen_prob, gen_seed);
      write_edge_list_file(g, gen_out);
      out << g.node_count() << " nodes, " << g.edge_count() << " edges\n";
      return kOk;
    }

    if (*solve) {
      const Graph g = read_edge_list_file(solve_graph);
      HarnessOptions options = solve_flags.options();
      options.kl_reference = solve_kl;
      const RunReport report = run_solve(g, solve_flags.resolved(), options);
      emit(to_json(report), solve_out, out);
      return kOk;
    }

    if (*sweep) {
      const auto axis = parse_sweep_axis(sweep_axis);
      if (!axis) {
        err << "sweep: unknown axis '" << sweep_axis << "'\n";
        return kInputError;
      }
      const Graph g = read_edge_list_file(sweep_graph);
      const auto rows = run_sweep(std::filesystem::path(sweep_graph).filename().string(), g, *axis,
                                  parse_values(sweep_values), sweep_repeats, sweep_flags.resolved(),
                                  sweep_flags.options());
      std::ostringstream csv;
      write_sweep_csv(csv, rows);
      emit(csv.str(), sweep_out, out);
      return kOk;
    }

    if (*compare) {
      if (compare_graphs.empty()) {
        err << "compare: at least one graph file is required\n";
        return kInputError;
      }
      std::vector<std::pair<std::string, Graph>> graphs;
      for (const auto& path : compare_graphs) {
        graphs.emplace_back(std::filesystem::path(path).filename().string(), read_edge_list_file(path));
      }
      const auto rows = run_compare(graphs, compare_flags.resolved(), compare_flags.options());
      std::ostringstream csv;
      write_compare_csv(csv, rows);
      emit(csv.str(), compare_out, out);
      return kOk;
    }

    if (*qsr) {
      const auto scheme = parse_qsr_scheme(qsr_scheme);
      if (!scheme) {
        err << "qsr: unknown scheme '" << qsr_scheme << "'\n";
        return kInputError;
      }
      const Graph g1 = read_edge_list_file(qsr_inputs[0]);
      const Graph g2 = read_edge_list_file(qsr_inputs[1]);
      const SolutionMap m1 = parse_solution_map(read_file(qsr_inputs[2]));
      const SolutionMap m2 = parse_solution_map(read_file(qsr_inputs[3]));
      emit(to_json(combine(g1, g2, m1, m2, *scheme)), qsr_out, out);
      return kOk;
    }
  } catch (const ConnectivityError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const ReconstructionError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const RefusalError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}

}  // namespace dcqaoa::cli
