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

#include "dcqaoa/qsr.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "dcqaoa/errors.hpp"

namespace dcqaoa {

std::string to_string(QsrScheme scheme) {
  switch (scheme) {
    case QsrScheme::kMin: return "min";
    case QsrScheme::kMul: return "mul";
    case QsrScheme::kSum: return "sum";
    case QsrScheme::kMinXMul: return "minXmul";
  }
  return "unknown";
}

std::optional<QsrScheme> parse_qsr_scheme(std::string_view name) {
  if (name == "min") return QsrScheme::kMin;
  if (name == "mul") return QsrScheme::kMul;
  if (name == "sum") return QsrScheme::kSum;
  if (name == "minXmul" || name == "minxmul") return QsrScheme::kMinXMul;
  return std::nullopt;
}

Count apply_scheme(QsrScheme scheme, Count c1, Count c2) {
  Count out = 0;
  bool overflow = false;
  switch (scheme) {
    case QsrScheme::kMin: out = std::min(c1, c2); break;
    case QsrScheme::kMul: overflow = __builtin_mul_overflow(c1, c2, &out); break;
    case QsrScheme::kSum: overflow = __builtin_add_overflow(c1, c2, &out); break;
    case QsrScheme::kMinXMul: {
      Count prod = 0;
      overflow = __builtin_mul_overflow(c1, c2, &prod) ||
                 __builtin_mul_overflow(std::min(c1, c2), prod, &out);
      break;
    }
  }
  if (overflow) {
    throw ContractError(to_string(scheme) + " count overflow for " + std::to_string(c1) + " and " +
                        std::to_string(c2));
  }
  return out;
}

SolutionMap combine(const Graph& g1, const Graph& g2, const SolutionMap& m1, const SolutionMap& m2,
                    QsrScheme scheme) {
  if (m1.node_set() != g1.nodes() || m2.node_set() != g2.nodes()) {
    throw ContractError("solution maps must be keyed on their subgraph's nodes");
  }
  std::vector<NodeId> merged;
  std::set_union(g1.nodes().begin(), g1.nodes().end(), g2.nodes().begin(), g2.nodes().end(),
                 std::back_inserter(merged));

  // Position pairs (in m1, in m2) of every shared node.
  std::vector<std::pair<std::size_t, std::size_t>> shared;
  for (std::size_t i = 0; i < g1.node_count(); ++i) {
    if (auto j = g2.position_of(g1.nodes()[i])) shared.emplace_back(i, *j);
  }
  if (shared.empty()) throw ContractError("subgraphs share no node");

  // For each merged position: (from_first, position in that map).
  std::vector<std::pair<bool, std::size_t>> source(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    if (auto p = g1.position_of(merged[i])) {
      source[i] = {true, *p};
    } else {
      source[i] = {false, *g2.position_of(merged[i])};
    }
  }

  std::vector<SolutionEntry> entries;
  std::string joined(merged.size(), '0');
  for (const auto& [a1, c1] : m1.entries()) {
    for (const auto& [a2, c2] : m2.entries()) {
      const bool compatible = std::all_of(shared.begin(), shared.end(), [&](const auto& ij) {
        return a1[ij.first] == a2[ij.second];
      });
      if (!compatible) continue;
      for (std::size_t i = 0; i < merged.size(); ++i) {
        joined[i] = source[i].first ? a1[source[i].second] : a2[source[i].second];
      }
      entries.push_back({joined, apply_scheme(scheme, c1, c2)});
    }
  }
  // Distinct keys in m1 and m2 always give distinct merged keys, since the
  // merged string restricts back to both.
  SolutionMap out(std::move(merged), std::move(entries));
  out.sort();
  return out;
}

SolutionMap rerank_by_cut(const Graph& g, const SolutionMap& m) {
  if (m.node_set() != g.nodes()) throw ContractError("solution map is not keyed on the graph's nodes");
  std::vector<Count> counts;
  std::vector<std::pair<std::size_t, std::string>> by_cut;
  counts.reserve(m.size());
  by_cut.reserve(m.size());
  for (const auto& e : m.entries()) {
    counts.push_back(e.count);
    by_cut.emplace_back(cut_size(g, e.assignment), e.assignment);
  }
  std::sort(counts.begin(), counts.end(), std::greater<>());
  std::sort(by_cut.begin(), by_cut.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  std::vector<SolutionEntry> entries;
  entries.reserve(m.size());
  for (std::size_t i = 0; i < by_cut.size(); ++i) entries.push_back({std::move(by_cut[i].second), counts[i]});
  SolutionMap out(m.node_set(), std::move(entries));
  out.sort();
  return out;
}

double kl_divergence(const SolutionMap& reconstructed, const SolutionMap& reference, double smoothing) {
  if (reconstructed.node_set() != reference.node_set()) {
    throw ContractError("KL divergence needs maps over the same node set");
  }
  if (reconstructed.empty() && reference.empty()) throw ContractError("KL divergence of two empty maps");

  // assignment -> (count in P, count in Q)
  std::map<std::string, std::pair<long double, long double>> support;
  for (const auto& e : reconstructed.entries()) support[e.assignment].first += e.count;
  for (const auto& e : reference.entries()) support[e.assignment].second += e.count;

  long double total_p = 0.0L;
  long double total_q = 0.0L;
  for (const auto& [key, pq] : support) {
    total_p += pq.first;
    total_q += pq.second;
  }
  const long double eps = smoothing;
  const long double norm = 1.0L + eps * static_cast<long double>(support.size());
  long double kl = 0.0L;
  for (const auto& [key, pq] : support) {
    const long double p = ((total_p > 0 ? pq.first / total_p : 0.0L) + eps) / norm;
    const long double q = ((total_q > 0 ? pq.second / total_q : 0.0L) + eps) / norm;
    kl += p * std::log(p / q);
  }
  return static_cast<double>(kl);
}

}  // namespace dcqaoa
