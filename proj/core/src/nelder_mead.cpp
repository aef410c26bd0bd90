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

#include "dcqaoa/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

#include "dcqaoa/errors.hpp"

namespace dcqaoa {

namespace {

struct Vertex {
  std::vector<double> x;
  double f = 0.0;
};

std::vector<double> affine(const std::vector<double>& a, const std::vector<double>& b, double t) {
  // a + t * (b - a)
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + t * (b[i] - a[i]);
  return out;
}

}  // namespace

SimplexResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                   std::vector<double> x0, const SimplexOptions& options) {
  if (x0.empty()) throw ContractError("nelder_mead_minimize needs at least one dimension");
  if (options.max_evaluations == 0) throw ContractError("evaluation budget must be positive");

  const std::size_t dim = x0.size();
  SimplexResult best;
  std::size_t evals = 0;
  auto evaluate = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++evals;
    if (evals == 1 || v < best.value) {
      best.x = x;
      best.value = v;
    }
    return v;
  };
  auto budget_left = [&] { return evals < options.max_evaluations; };

  std::vector<Vertex> simplex;
  simplex.reserve(dim + 1);
  simplex.push_back({x0, evaluate(x0)});
  for (std::size_t i = 0; i < dim && budget_left(); ++i) {
    std::vector<double> x = x0;
    x[i] += options.initial_step;
    simplex.push_back({x, evaluate(x)});
  }
  if (simplex.size() < dim + 1) {
    best.evaluations = evals;
    return best;
  }

  auto by_value = [](const Vertex& a, const Vertex& b) { return a.f < b.f; };
  while (budget_left()) {
    std::stable_sort(simplex.begin(), simplex.end(), by_value);
    if (simplex.back().f - simplex.front().f < options.tolerance) {
      best.converged = true;
      break;
    }

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t v = 0; v < dim; ++v) {
      for (std::size_t i = 0; i < dim; ++i) centroid[i] += simplex[v].x[i];
    }
    for (double& c : centroid) c /= static_cast<double>(dim);

    Vertex& worst = simplex.back();
    const double second_worst = simplex[dim - 1].f;

    std::vector<double> reflected = affine(centroid, worst.x, -1.0);
    const double fr = evaluate(reflected);
    if (fr < simplex.front().f) {
      if (!budget_left()) {
        worst = {std::move(reflected), fr};
        break;
      }
      std::vector<double> expanded = affine(centroid, worst.x, -2.0);
      const double fe = evaluate(expanded);
      worst = fe < fr ? Vertex{std::move(expanded), fe} : Vertex{std::move(reflected), fr};
      continue;
    }
    if (fr < second_worst) {
      worst = {std::move(reflected), fr};
      continue;
    }
    if (!budget_left()) break;

    // Outside contraction when the reflection beat the worst point, inside otherwise.
    const bool outside = fr < worst.f;
    std::vector<double> contracted = affine(centroid, worst.x, outside ? -0.5 : 0.5);
    const double fc = evaluate(contracted);
    if (fc < (outside ? fr : worst.f)) {
      worst = {std::move(contracted), fc};
      continue;
    }

    for (std::size_t v = 1; v <= dim && budget_left(); ++v) {
      simplex[v].x = affine(simplex.front().x, simplex[v].x, 0.5);
      simplex[v].f = evaluate(simplex[v].x);
    }
  }
  best.evaluations = evals;
  return best;
}

}  // namespace dcqaoa
