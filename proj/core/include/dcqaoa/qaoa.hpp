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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcqaoa/graph.hpp"
#include "dcqaoa/solution_map.hpp"

namespace dcqaoa {

inline constexpr std::size_t kMaxQubits = 20;

/// One (gamma, beta) pair per circuit layer.
struct AnsatzParams {
  struct Layer {
    double gamma = 0.0;
    double beta = 0.0;
    friend bool operator==(const Layer&, const Layer&) = default;
  };
  std::vector<Layer> layers;

  std::size_t depth() const noexcept { return layers.size(); }
  static AnsatzParams zeros(std::size_t p) { return AnsatzParams{std::vector<Layer>(p)}; }

  friend bool operator==(const AnsatzParams&, const AnsatzParams&) = default;
};

/// Amplitudes of an n-qubit register.  Basis index b encodes the assignment
/// whose position 0 is the most significant bit of b.
class Statevector {
 public:
  using Amplitude = std::complex<double>;

  Statevector() = default;
  Statevector(std::size_t qubits, std::vector<Amplitude> amplitudes);

  /// Computational basis state |index>.
  static Statevector basis(std::size_t qubits, std::uint64_t index);

  std::size_t qubits() const noexcept { return qubits_; }
  std::size_t dimension() const noexcept { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const noexcept { return amplitudes_; }
  std::vector<Amplitude>& amplitudes() noexcept { return amplitudes_; }

  double norm_squared() const;
  std::vector<double> probabilities() const;

 private:
  std::size_t qubits_ = 0;
  std::vector<Amplitude> amplitudes_;
};

/// Cut value of every basis index of g, length 2^|g|.
std::vector<std::uint32_t> cut_table(const Graph& g);

/// Uniform superposition over n qubits.  Throws RefusalError above kMaxQubits.
Statevector build_initial_state(std::size_t n);

/// Multiplies amplitude b by exp(-i * gamma * cut(b)).
void apply_cost_layer(Statevector& s, const std::vector<std::uint32_t>& cuts, double gamma);
void apply_cost_layer(Statevector& s, const Graph& g, double gamma);

/// Applies RX(2 beta) to every qubit.
void apply_mixer_layer(Statevector& s, double beta);

/// Full circuit: H on every qubit, then p alternating cost/mixer layers.
Statevector qaoa_state(const Graph& g, const AnsatzParams& params);

/// Exact <C> of the final state.
double qaoa_expectation(const Graph& g, const AnsatzParams& params);

struct OptimizerOptions {
  std::uint64_t seed = 0;
  /// Objective evaluations per restart.
  std::size_t budget = 200;
  std::size_t restarts = 5;
  double tolerance = 1e-4;
};

struct OptimizedParams {
  AnsatzParams params;
  double expectation = 0.0;
  std::size_t evaluations = 0;
};

/// Multi-start Nelder–Mead maximisation of `qaoa_expectation`.  Start points
/// are drawn uniformly from gamma in [0, 2pi), beta in [0, pi); the returned
/// angles are wrapped back into that box.
OptimizedParams optimize_params(const Graph& g, std::size_t p, const OptimizerOptions& options);

/// Draws `shots` measurements of the final state.  Output is sorted.
SolutionMap sample_solution_map(const Graph& g, const AnsatzParams& params, std::uint64_t shots,
                                std::uint64_t seed);

struct QaoaOptions {
  std::size_t p = 3;
  std::uint64_t shots = 1000;
  std::uint64_t seed = 0;
  std::size_t budget = 200;
  std::size_t restarts = 5;
  double tolerance = 1e-4;
};

/// Optimise then sample.  The sampling seed is derived from `options.seed`.
SolutionMap qaoa_maxcut(const Graph& g, const QaoaOptions& options);

}  // namespace dcqaoa
