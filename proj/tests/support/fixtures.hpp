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

#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dcqaoa/graph.hpp"
#include "dcqaoa/qaoa.hpp"

namespace dcqaoa::testing {

inline Graph toy_graph() { return Graph::from_edges({}, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}}); }
inline Graph k2() { return Graph::from_edges({}, {{0, 1}}); }
inline Graph triangle() { return Graph::from_edges({}, {{0, 1}, {0, 2}, {1, 2}}); }
inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges({}, std::move(e));
}
inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, static_cast<NodeId>(n - 1));
  return Graph::from_edges({}, std::move(e));
}
inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> e;
  for (NodeId i = 0; i < n; ++i)
    for (NodeId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges({}, std::move(e));
}

// Dense-matrix QAOA: builds the full 2^n x 2^n mixer as a Kronecker product
// and multiplies it in.  Only meant for n <= 6.
using Cplx = std::complex<double>;
using Dense = std::vector<std::vector<Cplx>>;

inline Dense kron(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), m = b.size();
  Dense out(n * m, std::vector<Cplx>(n * m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) out[i * m + k][j * m + l] = a[i][j] * b[k][l];
  return out;
}

inline std::vector<Cplx> matvec(const Dense& a, const std::vector<Cplx>& v) {
  std::vector<Cplx> out(v.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

inline std::vector<double> dense_qaoa_probabilities(const Graph& g, const AnsatzParams& params) {
  const std::size_t n = g.node_count();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Cplx> psi(dim, Cplx(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));
  for (const auto& layer : params.layers) {
    for (std::size_t x = 0; x < dim; ++x) {
      const double c = static_cast<double>(cut_size(g, mask_to_assignment(x, n)));
      psi[x] *= std::exp(Cplx(0.0, -layer.gamma * c));
    }
    const double cb = std::cos(layer.beta), sb = std::sin(layer.beta);
    const Dense rx{{Cplx(cb, 0), Cplx(0, -sb)}, {Cplx(0, -sb), Cplx(cb, 0)}};
    Dense mixer{{Cplx(1, 0)}};
    for (std::size_t q = 0; q < n; ++q) mixer = kron(mixer, rx);
    psi = matvec(mixer, psi);
  }
  std::vector<double> p(dim);
  for (std::size_t x = 0; x < dim; ++x) p[x] = std::norm(psi[x]);
  return p;
}

inline double dense_qaoa_expectation(const Graph& g, const AnsatzParams& params) {
  const auto p = dense_qaoa_probabilities(g, params);
  double ev = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    ev += p[x] * static_cast<double>(cut_size(g, mask_to_assignment(x, g.node_count())));
  }
  return ev;
}

// Number of connected components of g minus the positions in `removed`.
inline std::size_t components_after(const Graph& g, std::uint32_t removed) {
  const std::size_t n = g.node_count();
  std::vector<int> seen(n, 0);
  std::size_t count = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s] || (removed >> s & 1U)) continue;
    ++count;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w : g.neighbors(v)) {
        if (!seen[w] && !(removed >> w & 1U)) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
  }
  return count;
}

// True when the positions in `subset` can be ordered into a simple path of g.
inline bool has_hamiltonian_path(const Graph& g, std::uint32_t subset) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < n; ++v)
    if (subset >> v & 1U) idx.push_back(v);
  const std::size_t m = idx.size();
  if (m <= 1) return m == 1;
  std::vector<std::vector<bool>> adj(m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t w : g.neighbors(idx[a]))
      for (std::size_t b = 0; b < m; ++b)
        if (idx[b] == w) adj[a][b] = true;
  // reach[mask][end]
  std::vector<std::vector<bool>> reach(std::size_t{1} << m, std::vector<bool>(m, false));
  for (std::size_t a = 0; a < m; ++a) reach[std::size_t{1} << a][a] = true;
  for (std::size_t mask = 1; mask < reach.size(); ++mask)
    for (std::size_t a = 0; a < m; ++a) {
      if (!reach[mask][a]) continue;
      for (std::size_t b = 0; b < m; ++b)
        if (adj[a][b] && !(mask >> b & 1U)) reach[mask | (std::size_t{1} << b)][b] = true;
    }
  for (std::size_t a = 0; a < m; ++a)
    if (reach.back()[a]) return true;
  return false;
}

// Smallest node count of a path separator that leaves exactly two
// components, searched over all node subsets.  Only for n <= 16.
inline std::optional<std::size_t> min_path_separator(const Graph& g, std::size_t below) {
  const std::size_t n = g.node_count();
  std::optional<std::size_t> best;
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= below || (best && size >= *best)) continue;
    if (components_after(g, s) == 2 && has_hamiltonian_path(g, s)) best = size;
  }
  return best;
}

}  // namespace dcqaoa::testing
