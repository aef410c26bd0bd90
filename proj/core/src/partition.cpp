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

#include "dcqaoa/partition.hpp"

#include <algorithm>

#include "dcqaoa/errors.hpp"

namespace dcqaoa {

namespace {

// Depth-first extension of a partial path.  Neighbour lists are sorted, so
// paths are produced in lexicographic order of their position sequence,
// which matches label order because positions follow sorted labels.
class PathWalker {
 public:
  PathWalker(const Graph& g, std::size_t length,
             const std::function<bool(const std::vector<NodeId>&)>& visit)
      : g_(g), length_(length), visit_(visit), on_path_(g.node_count(), false) {}

  bool run() {
    for (std::size_t start = 0; start < g_.node_count(); ++start) {
      if (!extend(start)) return false;
    }
    return true;
  }

 private:
  bool extend(std::size_t v) {
    path_.push_back(v);
    on_path_[v] = true;
    bool keep_going = true;
    if (path_.size() == length_) {
      // One orientation per undirected path.
      if (length_ == 1 || path_.front() < path_.back()) {
        labels_.clear();
        for (std::size_t p : path_) labels_.push_back(g_.nodes()[p]);
        keep_going = visit_(labels_);
      }
    } else {
      for (std::size_t w : g_.neighbors(v)) {
        if (on_path_[w]) continue;
        if (!extend(w)) {
          keep_going = false;
          break;
        }
      }
    }
    on_path_[v] = false;
    path_.pop_back();
    return keep_going;
  }

  const Graph& g_;
  std::size_t length_;
  const std::function<bool(const std::vector<NodeId>&)>& visit_;
  std::vector<bool> on_path_;
  std::vector<std::size_t> path_;
  std::vector<NodeId> labels_;
};

}  // namespace

void for_each_path(const Graph& g, std::size_t length,
                   const std::function<bool(const std::vector<NodeId>&)>& visit) {
  if (length == 0) throw ContractError("path length must be at least 1");
  if (length > g.node_count()) return;
  PathWalker(g, length, visit).run();
}

std::vector<std::vector<NodeId>> enumerate_paths(const Graph& g, std::size_t length) {
  std::vector<std::vector<NodeId>> out;
  for_each_path(g, length, [&](const std::vector<NodeId>& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

namespace {

// Component id per position after blocking `blocked`; returns the count.
// Ids are assigned in ascending order of each component's smallest position.
std::size_t label_components(const Graph& g, const std::vector<bool>& blocked,
                             std::vector<int>& comp_of, std::size_t stop_after) {
  comp_of.assign(g.node_count(), -1);
  std::vector<std::size_t> stack;
  std::size_t count = 0;
  for (std::size_t start = 0; start < g.node_count(); ++start) {
    if (blocked[start] || comp_of[start] >= 0) continue;
    if (count == stop_after) return count + 1;
    comp_of[start] = static_cast<int>(count);
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(v)) {
        if (!blocked[w] && comp_of[w] < 0) {
          comp_of[w] = static_cast<int>(count);
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return count;
}

std::vector<bool> blocked_mask(const Graph& g, const std::vector<NodeId>& removed) {
  std::vector<bool> blocked(g.node_count(), false);
  for (NodeId v : removed) {
    auto pos = g.position_of(v);
    if (!pos) throw ContractError("node " + std::to_string(v) + " is not in the graph");
    blocked[*pos] = true;
  }
  return blocked;
}

}  // namespace

std::vector<std::vector<NodeId>> components_without(const Graph& g,
                                                    const std::vector<NodeId>& removed) {
  const std::vector<bool> blocked = blocked_mask(g, removed);
  std::vector<int> comp_of;
  const std::size_t count = label_components(g, blocked, comp_of, g.node_count() + 1);
  std::vector<std::vector<NodeId>> comps(count);
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (comp_of[i] >= 0) comps[static_cast<std::size_t>(comp_of[i])].push_back(g.nodes()[i]);
  }
  return comps;
}

SeparationResult nlgp(const Graph& g, std::size_t k) {
  const std::size_t n = g.node_count();
  if (k < 1) throw ContractError("nlgp needs k >= 1");
  if (n <= k) throw ContractError("nlgp needs more than k nodes");
  if (!is_connected(g)) throw ContractError("nlgp needs a connected graph");

  std::vector<NodeId> separator;
  std::vector<int> comp_of;
  std::vector<bool> blocked(n, false);
  for (std::size_t length = 1; length < k && separator.empty(); ++length) {
    for_each_path(g, length, [&](const std::vector<NodeId>& path) {
      std::fill(blocked.begin(), blocked.end(), false);
      for (NodeId v : path) blocked[*g.position_of(v)] = true;
      if (label_components(g, blocked, comp_of, 2) == 2) {
        separator = path;
        return false;
      }
      return true;
    });
  }
  if (separator.empty()) throw ConnectivityError(n, k);

  // comp_of still describes the accepted candidate.
  std::vector<NodeId> side_nodes[2];
  for (std::size_t i = 0; i < n; ++i) {
    if (comp_of[i] >= 0) side_nodes[comp_of[i]].push_back(g.nodes()[i]);
  }
  std::vector<Edge> side_edges[2];
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge_positions()[e];
    const int side = comp_of[a] >= 0 ? comp_of[a] : (comp_of[b] >= 0 ? comp_of[b] : 0);
    side_edges[side].push_back(g.edges()[e]);
  }
  for (auto& nodes : side_nodes) {
    nodes.insert(nodes.end(), separator.begin(), separator.end());
    if (nodes.size() >= n) throw ProgressError("separator split did not shrink the graph");
  }
  return SeparationResult{separator, g.subgraph(side_nodes[0], side_edges[0]),
                          g.subgraph(side_nodes[1], side_edges[1])};
}

double nrl(const Graph& original, const std::vector<Graph>& parts) {
  if (parts.empty()) throw ContractError("nrl needs at least one part");
  if (original.node_count() == 0) throw ContractError("nrl of an empty graph");
  std::size_t total = 0;
  for (const Graph& part : parts) {
    for (NodeId v : part.nodes()) {
      if (!original.contains(v)) throw ContractError("part node " + std::to_string(v) + " not in original");
    }
    total += part.node_count();
  }
  return static_cast<double>(total) / static_cast<double>(original.node_count());
}

}  // namespace dcqaoa
