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

#include "dcqaoa/dc_qaoa.hpp"

#include <algorithm>

#include "dcqaoa/errors.hpp"
#include "dcqaoa/partition.hpp"
#include "dcqaoa/qaoa.hpp"
#include "dcqaoa/random.hpp"

namespace dcqaoa {

namespace {
__extension__ typedef unsigned __int128 Wide;
}  // namespace

void DcConfig::validate() const {
  if (k < 2) throw ContractError("k must be at least 2");
  if (t < 1) throw ContractError("t must be at least 1");
  if (s < 1) throw ContractError("s must be at least 1");
  if (p < 1) throw ContractError("p must be at least 1");
  if (budget < 1) throw ContractError("budget must be at least 1");
}

SolutionMap weight_map(const SolutionMap& m) {
  std::vector<SolutionEntry> entries = m.entries();
  const Count weight = m.width();
  for (auto& e : entries) {
    if (__builtin_mul_overflow(e.count, weight, &e.count)) throw ContractError("weighted count overflow");
  }
  return SolutionMap(m.node_set(), std::move(entries));
}

SolutionMap abridge(const SolutionMap& m, std::size_t t) {
  std::vector<SolutionEntry> kept;
  const std::size_t n = std::min(t, m.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (m.entries()[i].count > 0) kept.push_back(m.entries()[i]);
  }
  return SolutionMap(m.node_set(), std::move(kept));
}

SolutionMap rescale(const SolutionMap& m, std::uint64_t s) {
  Wide total = 0;
  for (const auto& e : m.entries()) total += e.count;
  if (total == 0) throw ContractError("cannot rescale a map with zero total count");
  std::vector<SolutionEntry> kept;
  for (const auto& e : m.entries()) {
    const auto scaled = static_cast<Count>(static_cast<Wide>(s) * e.count / total);
    if (scaled > 0) kept.push_back({e.assignment, scaled});
  }
  SolutionMap out(m.node_set(), std::move(kept));
  out.sort();
  return out;
}

namespace {

// Separator nodes with no edge inside a subgraph carry no constraint there;
// dropping them keeps both halves connected.  At least one shared node stays.
Graph drop_isolated_shared(const Graph& g, const std::vector<NodeId>& separator) {
  std::vector<NodeId> keep;
  std::vector<NodeId> dropped;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    const NodeId v = g.nodes()[i];
    const bool shared = std::find(separator.begin(), separator.end(), v) != separator.end();
    if (shared && g.neighbors(i).empty()) {
      dropped.push_back(v);
    } else {
      keep.push_back(v);
    }
  }
  if (dropped.empty() || dropped.size() == separator.size()) return g;
  return g.subgraph(std::move(keep), g.edges());
}

struct Solved {
  SolutionMap map;
  std::unique_ptr<PartitionNode> node;
};

Solved solve(const Graph& g, const DcConfig& cfg, std::size_t depth) {
  auto node = std::make_unique<PartitionNode>();
  node->nodes = g.nodes();
  node->depth = depth;

  SolutionMap out;
  if (g.node_count() <= cfg.k) {
    QaoaOptions q;
    q.p = cfg.p;
    q.shots = cfg.s;
    q.seed = derive_seed(cfg.seed, g.nodes());
    q.budget = cfg.budget;
    q.restarts = cfg.restarts;
    q.tolerance = cfg.tolerance;
    out = qaoa_maxcut(g, q);
  } else {
    SeparationResult split = nlgp(g, cfg.k);
    const Graph first = drop_isolated_shared(split.first, split.separator);
    const Graph second = drop_isolated_shared(split.second, split.separator);
    Solved left = solve(first, cfg, depth + 1);
    Solved right = solve(second, cfg, depth + 1);
    out = combine(first, second, weight_map(left.map), weight_map(right.map), cfg.scheme);
    if (out.empty()) {
      throw ReconstructionError(depth, "no compatible pair across separator of " +
                                           std::to_string(split.separator.size()) + " nodes");
    }
    node->separator = std::move(split.separator);
    node->nrl = nrl(g, {first, second});
    node->children.push_back(std::move(left.node));
    node->children.push_back(std::move(right.node));
  }

  out = rescale(abridge(rerank_by_cut(g, out), cfg.t), cfg.s);
  if (out.empty()) throw ReconstructionError(depth, "every count rescaled to zero");
  return {std::move(out), std::move(node)};
}

void visit(const PartitionNode& node, const auto& fn) {
  fn(node);
  for (const auto& child : node.children) visit(*child, fn);
}

}  // namespace

double DcResult::overall_nrl() const {
  if (!tree || tree->nodes.empty()) return 1.0;
  std::size_t total = 0;
  visit(*tree, [&](const PartitionNode& n) {
    if (n.is_leaf()) total += n.nodes.size();
  });
  return static_cast<double>(total) / static_cast<double>(tree->nodes.size());
}

std::size_t DcResult::leaf_count() const {
  std::size_t count = 0;
  if (tree) visit(*tree, [&](const PartitionNode& n) { count += n.is_leaf(); });
  return count;
}

std::size_t DcResult::tree_size() const {
  std::size_t count = 0;
  if (tree) visit(*tree, [&](const PartitionNode&) { ++count; });
  return count;
}

DcResult solve_dc_qaoa(const Graph& g, const DcConfig& cfg) {
  cfg.validate();
  if (g.node_count() == 0) throw ContractError("dc_qaoa needs a non-empty graph");
  Solved root = solve(g, cfg, 0);
  return DcResult{std::move(root.map), std::move(root.node)};
}

SolutionMap dc_qaoa(const Graph& g, const DcConfig& cfg) { return solve_dc_qaoa(g, cfg).solution; }

}  // namespace dcqaoa
