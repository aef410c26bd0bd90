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

#include "dcqaoa/graph.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "dcqaoa/errors.hpp"
#include "dcqaoa/random.hpp"

namespace dcqaoa {

Graph Graph::from_edges(std::vector<NodeId> nodes, std::vector<std::pair<NodeId, NodeId>> edges) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) throw ValidationError("self-loop on node " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
    nodes.push_back(a);
    nodes.push_back(b);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  if (auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end()); dup != g.edges_.end()) {
    throw ValidationError("duplicate edge " + std::to_string(dup->u) + " " + std::to_string(dup->v));
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  g.nodes_ = std::move(nodes);
  g.build_index();
  return g;
}

void Graph::build_index() {
  adjacency_.assign(nodes_.size(), {});
  edge_positions_.clear();
  edge_positions_.reserve(edges_.size());
  for (const Edge& e : edges_) {
    const std::size_t a = *position_of(e.u);
    const std::size_t b = *position_of(e.v);
    adjacency_[a].push_back(b);
    adjacency_[b].push_back(a);
    edge_positions_.emplace_back(a, b);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

bool Graph::contains(NodeId label) const {
  return std::binary_search(nodes_.begin(), nodes_.end(), label);
}

std::optional<std::size_t> Graph::position_of(NodeId label) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), label);
  if (it == nodes_.end() || *it != label) return std::nullopt;
  return static_cast<std::size_t>(it - nodes_.begin());
}

Graph Graph::subgraph(std::vector<NodeId> nodes, const std::vector<Edge>& edges) const {
  Graph g;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (NodeId v : nodes) {
    if (!contains(v)) throw ContractError("subgraph node " + std::to_string(v) + " not in graph");
  }
  g.nodes_ = std::move(nodes);
  g.edges_ = edges;
  std::sort(g.edges_.begin(), g.edges_.end());
  for (const Edge& e : g.edges_) {
    if (!g.contains(e.u) || !g.contains(e.v)) throw ContractError("subgraph edge endpoint missing");
  }
  g.build_index();
  return g;
}

Graph Graph::induced(std::vector<NodeId> nodes) const {
  std::sort(nodes.begin(), nodes.end());
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    if (std::binary_search(nodes.begin(), nodes.end(), e.u) &&
        std::binary_search(nodes.begin(), nodes.end(), e.v)) {
      kept.push_back(e);
    }
  }
  return subgraph(std::move(nodes), kept);
}

namespace {

bool parse_label(std::string_view token, NodeId& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

Graph parse_edge_list(std::istream& in) {
  std::vector<NodeId> nodes;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::set<std::pair<NodeId, NodeId>> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);
    if (parts.empty()) continue;
    if (parts.size() > 2) throw ParseError(line_no, "expected one or two node labels");
    NodeId a = 0;
    NodeId b = 0;
    if (!parse_label(parts[0], a)) throw ParseError(line_no, "bad node label '" + parts[0] + "'");
    if (parts.size() == 1) {
      nodes.push_back(a);
      continue;
    }
    if (!parse_label(parts[1], b)) throw ParseError(line_no, "bad node label '" + parts[1] + "'");
    if (a == b) throw ValidationError("line " + std::to_string(line_no) + ": self-loop on node " + parts[0]);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw ValidationError("line " + std::to_string(line_no) + ": duplicate edge " + parts[0] + " " +
                            parts[1]);
    }
    edges.emplace_back(a, b);
  }
  return Graph::from_edges(std::move(nodes), std::move(edges));
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.node_count(); ++i) {
    if (g.neighbors(i).empty()) out += std::to_string(g.nodes()[i]) + "\n";
  }
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

void write_edge_list_file(const Graph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << serialize_edge_list(g);
  if (!out) throw Error("write to '" + path + "' failed");
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_edge_list(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed, std::size_t max_retries) {
  if (n < 1) throw ContractError("random_graph needs n >= 1");
  if (!(edge_prob > 0.0 && edge_prob <= 1.0)) throw ContractError("edge_prob must lie in (0, 1]");
  for (std::size_t attempt = 0; attempt <= max_retries; ++attempt) {
    Rng rng(seed + attempt);
    std::vector<NodeId> nodes(n);
    for (std::size_t i = 0; i < n; ++i) nodes[i] = static_cast<NodeId>(i);
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (uniform01(rng) < edge_prob) edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
      }
    }
    Graph g = Graph::from_edges(std::move(nodes), std::move(edges));
    if (is_connected(g)) return g;
  }
  throw GenerationError("no connected G(" + std::to_string(n) + ", " + std::to_string(edge_prob) +
                        ") sample after " + std::to_string(max_retries) + " retries");
}

std::vector<std::vector<NodeId>> dfs_connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> components;
  std::vector<bool> seen(g.node_count(), false);
  std::vector<std::size_t> stack;
  for (std::size_t start = 0; start < g.node_count(); ++start) {
    if (seen[start]) continue;
    std::vector<NodeId> comp;
    seen[start] = true;
    stack.push_back(start);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.push_back(g.nodes()[v]);
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  // Starts are scanned in ascending order, so components already come out
  // ordered by their smallest member.
  return components;
}

bool is_connected(const Graph& g) { return dfs_connected_components(g).size() <= 1; }

std::size_t cut_size(const Graph& g, std::string_view assignment) {
  if (assignment.size() != g.node_count()) {
    throw ContractError("assignment length " + std::to_string(assignment.size()) +
                        " != node count " + std::to_string(g.node_count()));
  }
  for (char c : assignment) {
    if (c != '0' && c != '1') throw ContractError("assignment characters must be '0' or '1'");
  }
  std::size_t cut = 0;
  for (const auto& [a, b] : g.edge_positions()) cut += assignment[a] != assignment[b];
  return cut;
}

std::size_t cut_size_mask(const Graph& g, std::uint64_t mask) {
  const std::size_t n = g.node_count();
  std::size_t cut = 0;
  for (const auto& [a, b] : g.edge_positions()) {
    cut += ((mask >> (n - 1 - a)) ^ (mask >> (n - 1 - b))) & 1U;
  }
  return cut;
}

std::string complement(std::string_view assignment) {
  std::string out(assignment);
  for (char& c : out) c = c == '0' ? '1' : '0';
  return out;
}

std::string mask_to_assignment(std::uint64_t mask, std::size_t n) {
  std::string out(n, '0');
  for (std::size_t j = 0; j < n; ++j) {
    if ((mask >> (n - 1 - j)) & 1U) out[j] = '1';
  }
  return out;
}

std::uint64_t assignment_to_mask(std::string_view assignment) {
  if (assignment.size() > 64) throw ContractError("assignment longer than 64 bits");
  std::uint64_t mask = 0;
  for (char c : assignment) mask = (mask << 1) | static_cast<std::uint64_t>(c == '1');
  return mask;
}

MaxCutResult brute_force_maxcut(const Graph& g, std::size_t limit) {
  const std::size_t n = g.node_count();
  if (n > limit) {
    throw RefusalError("brute force refused: " + std::to_string(n) + " nodes exceed limit " +
                       std::to_string(limit));
  }
  MaxCutResult result;
  if (n == 0) {
    result.optimal.emplace_back();
    return result;
  }
  // Walk the 2^(n-1) assignments with position 0 fixed to '0' in Gray-code
  // order so each step flips one bit and updates the cut incrementally.
  const std::size_t free_bits = n - 1;
  const std::uint64_t steps = std::uint64_t{1} << free_bits;
  std::vector<std::uint8_t> side(n, 0);
  std::uint64_t mask = 0;
  long long cut = 0;
  std::vector<std::uint64_t> best_masks{0};
  long long best = 0;
  for (std::uint64_t i = 1; i < steps; ++i) {
    // Flip free bit number ctz(i); free bit f lives at position n-1-f.
    const std::size_t f = static_cast<std::size_t>(std::countr_zero(i));
    const std::size_t pos = n - 1 - f;
    for (std::size_t w : g.neighbors(pos)) cut += side[w] == side[pos] ? 1 : -1;
    side[pos] ^= 1U;
    mask ^= std::uint64_t{1} << f;
    if (cut > best) {
      best = cut;
      best_masks.clear();
    }
    if (cut == best) best_masks.push_back(mask);
  }
  result.max_cut = static_cast<std::size_t>(best);
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t m : best_masks) {
    result.optimal.push_back(mask_to_assignment(m, n));
    result.optimal.push_back(mask_to_assignment(m ^ all, n));
  }
  std::sort(result.optimal.begin(), result.optimal.end());
  result.optimal.erase(std::unique(result.optimal.begin(), result.optimal.end()), result.optimal.end());
  return result;
}

}  // namespace dcqaoa
