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
#include <functional>
#include <span>
#include <vector>

namespace dcqaoa {

struct SimplexOptions {
  /// Hard cap on objective evaluations, including the initial simplex.
  std::size_t max_evaluations = 200;
  /// Stop once max f - min f over the simplex drops below this.
  double tolerance = 1e-4;
  /// Edge length of the initial right-angled simplex.
  double initial_step = 0.5;
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t evaluations = 0;
  bool converged = false;
};

/// Nelder–Mead minimisation with the standard coefficients (reflection 1,
/// expansion 2, contraction 1/2, shrink 1/2).  Returns the best point ever
/// evaluated, so a budget of 1 yields `x0` itself.
SimplexResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                   std::vector<double> x0, const SimplexOptions& options = {});

}  // namespace dcqaoa
