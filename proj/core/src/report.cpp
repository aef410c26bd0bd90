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

#include "dcqaoa/report.hpp"

#include <json.hpp>

#include "dcqaoa/errors.hpp"
#include "dcqaoa/qsr.hpp"

namespace dcqaoa {

using Json = nlohmann::ordered_json;

TreeSummary TreeSummary::from(const PartitionNode& node) {
  TreeSummary out{node.nodes, node.separator, node.nrl, {}};
  out.children.reserve(node.children.size());
  for (const auto& child : node.children) out.children.push_back(from(*child));
  return out;
}

bool operator==(const RunReport& a, const RunReport& b) {
  const auto cfg_eq = [](const DcConfig& x, const DcConfig& y) {
    return x.p == y.p && x.t == y.t && x.s == y.s && x.k == y.k && x.scheme == y.scheme &&
           x.seed == y.seed && x.budget == y.budget && x.restarts == y.restarts &&
           x.tolerance == y.tolerance;
  };
  return a.schema == b.schema && a.graph_hash == b.graph_hash && a.nodes == b.nodes &&
         a.edges == b.edges && cfg_eq(a.config, b.config) && a.reference == b.reference &&
         a.metrics == b.metrics && a.solution == b.solution && a.tree == b.tree;
}

namespace {

Json map_json(const SolutionMap& m) {
  Json counts = Json::object();
  for (const auto& e : m.entries()) counts[e.assignment] = e.count;
  return Json{{"nodes", m.node_set()}, {"counts", std::move(counts)}};
}

SolutionMap map_from(const Json& j) {
  SolutionMap m(j.at("nodes").get<std::vector<NodeId>>());
  for (const auto& [key, value] : j.at("counts").items()) m.insert(key, value.get<Count>());
  return m;
}

Json tree_json(const TreeSummary& t) {
  Json children = Json::array();
  for (const auto& c : t.children) children.push_back(tree_json(c));
  return Json{{"nodes", t.nodes}, {"separator", t.separator}, {"nrl", t.nrl}, {"children", children}};
}

TreeSummary tree_from(const Json& j) {
  TreeSummary t;
  t.nodes = j.at("nodes").get<std::vector<NodeId>>();
  t.separator = j.at("separator").get<std::vector<NodeId>>();
  t.nrl = j.at("nrl").get<double>();
  for (const auto& c : j.at("children")) t.children.push_back(tree_from(c));
  return t;
}

template <typename F>
auto guarded(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(0, what + ": " + e.what());
  }
}

}  // namespace

std::string to_json(const RunReport& r) {
  Json metrics{{"best_cut", r.metrics.best_cut},
               {"best_assignment", r.metrics.best_assignment},
               {"expectation_value", r.metrics.expectation_value},
               {"approximation_ratio_expectation", r.metrics.ar_expectation},
               {"approximation_ratio_best_sampled", r.metrics.ar_best_sampled},
               {"nrl", r.metrics.nrl},
               {"kl_divergence", r.metrics.kl_divergence ? Json(*r.metrics.kl_divergence) : Json(nullptr)},
               {"runtime_seconds", r.metrics.runtime_seconds},
               {"tree_size", r.metrics.tree_size},
               {"leaves", r.metrics.leaves}};
  Json j{{"schema", r.schema},
         {"graph", {{"hash", r.graph_hash}, {"nodes", r.nodes}, {"edges", r.edges}}},
         {"config",
          {{"p", r.config.p},
           {"t", r.config.t},
           {"s", r.config.s},
           {"k", r.config.k},
           {"scheme", to_string(r.config.scheme)},
           {"seed", r.config.seed},
           {"budget", r.config.budget},
           {"restarts", r.config.restarts},
           {"tolerance", r.config.tolerance}}},
         {"reference",
          {{"max_cut", r.reference.max_cut},
           {"method", r.reference.method},
           {"exact", r.reference.exact}}},
         {"metrics", std::move(metrics)},
         {"solution", map_json(r.solution)},
         {"partition_tree", tree_json(r.tree)}};
  return j.dump(2) + "\n";
}

RunReport parse_run_report(const std::string& text) {
  return guarded("run report", [&] {
    const Json j = Json::parse(text);
    RunReport r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw ParseError(0, "unsupported report schema '" + r.schema + "'");
    const Json& g = j.at("graph");
    r.graph_hash = g.at("hash").get<std::string>();
    r.nodes = g.at("nodes").get<std::size_t>();
    r.edges = g.at("edges").get<std::size_t>();
    const Json& c = j.at("config");
    r.config.p = c.at("p").get<std::size_t>();
    r.config.t = c.at("t").get<std::size_t>();
    r.config.s = c.at("s").get<std::uint64_t>();
    r.config.k = c.at("k").get<std::size_t>();
    const auto scheme = parse_qsr_scheme(c.at("scheme").get<std::string>());
    if (!scheme) throw ParseError(0, "unknown scheme in report");
    r.config.scheme = *scheme;
    r.config.seed = c.at("seed").get<std::uint64_t>();
    r.config.budget = c.at("budget").get<std::size_t>();
    r.config.restarts = c.at("restarts").get<std::size_t>();
    r.config.tolerance = c.at("tolerance").get<double>();
    const Json& ref = j.at("reference");
    r.reference = {ref.at("max_cut").get<std::size_t>(), ref.at("method").get<std::string>(),
                   ref.at("exact").get<bool>()};
    const Json& m = j.at("metrics");
    r.metrics.best_cut = m.at("best_cut").get<std::size_t>();
    r.metrics.best_assignment = m.at("best_assignment").get<std::string>();
    r.metrics.expectation_value = m.at("expectation_value").get<double>();
    r.metrics.ar_expectation = m.at("approximation_ratio_expectation").get<double>();
    r.metrics.ar_best_sampled = m.at("approximation_ratio_best_sampled").get<double>();
    r.metrics.nrl = m.at("nrl").get<double>();
    if (!m.at("kl_divergence").is_null()) r.metrics.kl_divergence = m.at("kl_divergence").get<double>();
    r.metrics.runtime_seconds = m.at("runtime_seconds").get<double>();
    r.metrics.tree_size = m.at("tree_size").get<std::size_t>();
    r.metrics.leaves = m.at("leaves").get<std::size_t>();
    r.solution = map_from(j.at("solution"));
    r.tree = tree_from(j.at("partition_tree"));
    return r;
  });
}

std::string to_json(const SolutionMap& m) { return map_json(m).dump(2) + "\n"; }

SolutionMap parse_solution_map(const std::string& text) {
  return guarded("solution map", [&] { return map_from(Json::parse(text)); });
}

}  // namespace dcqaoa
