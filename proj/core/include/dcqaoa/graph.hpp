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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcqaoa {

using NodeId = std::uint32_t;

/// Undirected edge, always stored with `u < v`.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected, unweighted simple graph over non-negative integer labels.
///
/// Nodes are kept sorted; the position of a label in `nodes()` is the bit
/// position used by every cut assignment over this graph.  Adjacency lists
/// are indexed by position and sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds a graph.  Edge endpoints are added to the node set
  /// implicitly.  Throws ValidationError on self-loops and duplicate edges.
  static Graph from_edges(std::vector<NodeId> nodes, std::vector<std::pair<NodeId, NodeId>> edges);

  const std::vector<NodeId>& nodes() const noexcept { return nodes_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }

  bool contains(NodeId label) const;
  std::optional<std::size_t> position_of(NodeId label) const;

  /// Neighbours of the node at `pos`, as positions.
  std::span<const std::size_t> neighbors(std::size_t pos) const { return adjacency_.at(pos); }

  /// Edges as position pairs (first < second), same order as `edges()`.
  const std::vector<std::pair<std::size_t, std::size_t>>& edge_positions() const noexcept {
    return edge_positions_;
  }

  /// Subgraph on `nodes` carrying exactly `edges`.  Both must be drawn from
  /// this graph.
  Graph subgraph(std::vector<NodeId> nodes, const std::vector<Edge>& edges) const;

  /// Subgraph on `nodes` with every edge of this graph between them.
  Graph induced(std::vector<NodeId> nodes) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  void build_index();

  std::vector<NodeId> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::pair<std::size_t, std::size_t>> edge_positions_;
};

// Edge-list text format: one "u v" pair per line, '#' starts a comment, a
// single-token line declares an isolated node.

Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list_file(const std::string& path);

/// Canonical form: isolated nodes first (ascending), then edges sorted by
/// (min endpoint, max endpoint).
std::string serialize_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

/// FNV-1a hash of the canonical serialization, as 16 hex digits.
std::string graph_hash(const Graph& g);

/// Connected Erdős–Rényi G(n, p) sample on labels 0..n-1.  Disconnected draws
/// are retried with seed+1, seed+2, ... up to `max_retries` times.
Graph random_graph(std::size_t n, double edge_prob, std::uint64_t seed,
                   std::size_t max_retries = 1000);

/// Components in ascending order of their smallest label.
std::vector<std::vector<NodeId>> dfs_connected_components(const Graph& g);

bool is_connected(const Graph& g);

// ---------------------------------------------------------------------------
// Cut assignments.  Character j of an assignment gives the side of the j-th
// smallest node: '1' is the cut set S, '0' its complement.

/// Number of edges whose endpoints disagree.  Throws ContractError on a
/// length mismatch or a character outside {0,1}.
std::size_t cut_size(const Graph& g, std::string_view assignment);

/// Same as `cut_size` for a packed assignment: bit (n-1-j) of `mask` holds
/// position j, so position 0 is the most significant bit.
std::size_t cut_size_mask(const Graph& g, std::uint64_t mask);

std::string complement(std::string_view assignment);
std::string mask_to_assignment(std::uint64_t mask, std::size_t n);
std::uint64_t assignment_to_mask(std::string_view assignment);

struct MaxCutResult {
  std::size_t max_cut = 0;
  /// Every optimal assignment, both orientations, sorted ascending.
  std::vector<std::string> optimal;
};

inline constexpr std::size_t kDefaultExhaustiveLimit = 24;

/// Exhaustive MaxCut over 2^(n-1) assignments with the smallest node fixed to
/// '0'; complements are added back.  Throws RefusalError above `limit`.
MaxCutResult brute_force_maxcut(const Graph& g, std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace dcqaoa
