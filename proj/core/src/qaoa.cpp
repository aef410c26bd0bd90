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

#include "dcqaoa/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dcqaoa/errors.hpp"
#include "dcqaoa/nelder_mead.hpp"
#include "dcqaoa/random.hpp"

namespace dcqaoa {

namespace {

void check_qubits(std::size_t n) {
  if (n > kMaxQubits) {
    throw RefusalError("simulation refused: " + std::to_string(n) + " qubits exceed cap " +
                       std::to_string(kMaxQubits));
  }
}

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap(double angle, double period) {
  double r = std::fmod(angle, period);
  if (r < 0.0) r += period;
  // fmod of a value just below a multiple can round up to the period.
  return r >= period ? 0.0 : r;
}

}  // namespace

Statevector::Statevector(std::size_t qubits, std::vector<Amplitude> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
  check_qubits(qubits);
  if (amplitudes_.size() != (std::size_t{1} << qubits)) {
    throw ContractError("statevector needs 2^n amplitudes");
  }
}

Statevector Statevector::basis(std::size_t qubits, std::uint64_t index) {
  check_qubits(qubits);
  std::vector<Amplitude> amps(std::size_t{1} << qubits);
  amps.at(index) = 1.0;
  return Statevector(qubits, std::move(amps));
}

double Statevector::norm_squared() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return sum;
}

std::vector<double> Statevector::probabilities() const {
  std::vector<double> p(amplitudes_.size());
  std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(),
                 [](const Amplitude& a) { return std::norm(a); });
  return p;
}

std::vector<std::uint32_t> cut_table(const Graph& g) {
  const std::size_t n = g.node_count();
  check_qubits(n);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::uint32_t> cuts(dim, 0);
  for (const auto& [a, b] : g.edge_positions()) {
    const std::size_t sa = n - 1 - a;
    const std::size_t sb = n - 1 - b;
    for (std::size_t i = 0; i < dim; ++i) cuts[i] += ((i >> sa) ^ (i >> sb)) & 1U;
  }
  return cuts;
}

Statevector build_initial_state(std::size_t n) {
  check_qubits(n);
  if (n < 1) throw ContractError("initial state needs at least one qubit");
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(n));
  return Statevector(n, std::vector<Statevector::Amplitude>(dim, {amp, 0.0}));
}

void apply_cost_layer(Statevector& s, const std::vector<std::uint32_t>& cuts, double gamma) {
  auto& amps = s.amplitudes();
  if (cuts.size() != amps.size()) throw ContractError("cut table does not match the statevector");
  const std::uint32_t max_cut = cuts.empty() ? 0 : *std::max_element(cuts.begin(), cuts.end());
  std::vector<Statevector::Amplitude> phase(max_cut + 1);
  for (std::uint32_t c = 0; c <= max_cut; ++c) phase[c] = std::polar(1.0, -gamma * static_cast<double>(c));
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] *= phase[cuts[i]];
}

void apply_cost_layer(Statevector& s, const Graph& g, double gamma) {
  if (g.node_count() != s.qubits()) throw ContractError("graph size does not match the statevector");
  apply_cost_layer(s, cut_table(g), gamma);
}

void apply_mixer_layer(Statevector& s, double beta) {
  // RX(2 beta) = [[cos beta, -i sin beta], [-i sin beta, cos beta]]
  const double c = std::cos(beta);
  const Statevector::Amplitude mis(0.0, -std::sin(beta));
  auto& amps = s.amplitudes();
  const std::size_t dim = amps.size();
  for (std::size_t q = 0; q < s.qubits(); ++q) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < dim; base += 2 * stride) {
      for (std::size_t i = base; i < base + stride; ++i) {
        const auto a0 = amps[i];
        const auto a1 = amps[i + stride];
        amps[i] = c * a0 + mis * a1;
        amps[i + stride] = mis * a0 + c * a1;
      }
    }
  }
}

namespace {

Statevector run_circuit(std::size_t n, const std::vector<std::uint32_t>& cuts,
                        const AnsatzParams& params) {
  Statevector s = build_initial_state(n);
  for (const auto& layer : params.layers) {
    apply_cost_layer(s, cuts, layer.gamma);
    apply_mixer_layer(s, layer.beta);
  }
  return s;
}

double expectation_of(const Statevector& s, const std::vector<std::uint32_t>& cuts) {
  double ev = 0.0;
  const auto& amps = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) ev += std::norm(amps[i]) * cuts[i];
  return ev;
}

void check_graph(const Graph& g) {
  if (g.node_count() == 0) throw ContractError("QAOA needs at least one node");
  check_qubits(g.node_count());
}

}  // namespace

Statevector qaoa_state(const Graph& g, const AnsatzParams& params) {
  check_graph(g);
  return run_circuit(g.node_count(), cut_table(g), params);
}

double qaoa_expectation(const Graph& g, const AnsatzParams& params) {
  check_graph(g);
  const auto cuts = cut_table(g);
  return expectation_of(run_circuit(g.node_count(), cuts, params), cuts);
}

OptimizedParams optimize_params(const Graph& g, std::size_t p, const OptimizerOptions& options) {
  check_graph(g);
  if (p < 1) throw ContractError("circuit depth must be at least 1");
  if (options.budget < 1) throw ContractError("optimizer budget must be at least 1");
  const std::size_t n = g.node_count();
  const auto cuts = cut_table(g);

  auto to_params = [p](std::span<const double> x) {
    AnsatzParams params = AnsatzParams::zeros(p);
    for (std::size_t l = 0; l < p; ++l) params.layers[l] = {x[2 * l], x[2 * l + 1]};
    return params;
  };
  auto objective = [&](std::span<const double> x) {
    return -expectation_of(run_circuit(n, cuts, to_params(x)), cuts);
  };

  Rng rng(mix_seed(options.seed, 0x5157a7e5));
  SimplexOptions simplex;
  simplex.max_evaluations = options.budget;
  simplex.tolerance = options.tolerance;

  OptimizedParams best;
  bool have_best = false;
  const std::size_t restarts = std::max<std::size_t>(options.restarts, 1);
  for (std::size_t r = 0; r < restarts; ++r) {
    std::vector<double> x0(2 * p);
    for (std::size_t l = 0; l < p; ++l) {
      x0[2 * l] = kTwoPi * uniform01(rng);
      x0[2 * l + 1] = std::numbers::pi * uniform01(rng);
    }
    const SimplexResult run = nelder_mead_minimize(objective, std::move(x0), simplex);
    best.evaluations += run.evaluations;
    if (!have_best || -run.value > best.expectation) {
      have_best = true;
      best.expectation = -run.value;
      best.params = to_params(run.x);
    }
  }
  for (auto& layer : best.params.layers) {
    layer.gamma = wrap(layer.gamma, kTwoPi);
    layer.beta = wrap(layer.beta, std::numbers::pi);
  }
  return best;
}

SolutionMap sample_solution_map(const Graph& g, const AnsatzParams& params, std::uint64_t shots,
                                std::uint64_t seed) {
  if (shots < 1) throw ContractError("shots must be at least 1");
  const Statevector s = qaoa_state(g, params);
  const std::vector<double> probs = s.probabilities();
  std::vector<double> cdf(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) cdf[i] = (acc += probs[i]);

  Rng rng(seed);
  std::vector<Count> counts(probs.size(), 0);
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = uniform01(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // Guard against u landing on the final cumulative value.
    std::size_t idx = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    while (probs[idx] == 0.0 && idx > 0) --idx;
    ++counts[idx];
  }

  std::vector<SolutionEntry> entries;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (counts[i] > 0) entries.push_back({mask_to_assignment(i, g.node_count()), counts[i]});
  }
  SolutionMap m(g.nodes(), std::move(entries));
  m.sort();
  return m;
}

SolutionMap qaoa_maxcut(const Graph& g, const QaoaOptions& options) {
  OptimizerOptions opt;
  opt.seed = options.seed;
  opt.budget = options.budget;
  opt.restarts = options.restarts;
  opt.tolerance = options.tolerance;
  const OptimizedParams best = optimize_params(g, options.p, opt);
  return sample_solution_map(g, best.params, options.shots, mix_seed(options.seed, 0x5a3b1e5));
}

}  // namespace dcqaoa
