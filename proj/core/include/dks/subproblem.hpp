// Copyright 2026 The dks Authors
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

#ifndef DKS_SUBPROBLEM_HPP_
#define DKS_SUBPROBLEM_HPP_

#include <span>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// Restricted problem over the q sampled coordinates:
//
//   max  sum_j c_j (u_j - x_j) [- sum_j L_j/2 (u_j - x_j)^2]
//   s.t. sum_j u_j = target,  0 <= u_j <= 1.
//
// `weights` is only read by SolveQuadratic.
struct SubproblemInstance {
  std::span<const double> gradient;
  std::span<const double> current;
  std::span<const double> weights;
  double target = 0.0;

  std::size_t size() const { return gradient.size(); }
};

struct SubproblemResult {
  std::vector<double> values;
  // Multiplier of the equality constraint (quadratic variant only).
  double dual = 0.0;
  int n_lower = 0;
  int n_upper = 0;
};

// Target values within this distance outside [0, q] are clamped; farther ones
// raise InfeasibleError.
inline constexpr double kTargetSlack = 1e-9;

// Continuous knapsack by greedy fill in order of decreasing gradient (ties:
// lower position first). At most one coordinate of the result is fractional.
SubproblemResult SolveLinear(const SubproblemInstance& inst);

// Water-filling: u_j(lambda) = clip(x_j + (c_j - lambda) / L_j, 0, 1) with
// lambda located by bisection on sum u_j(lambda) = target, then one Newton
// step on lambda over the free coordinates. Requires L_j > 0.
SubproblemResult SolveQuadratic(const SubproblemInstance& inst);

enum class WeightMode { kDegree, kSqrtDegree, kConstant };

inline constexpr double kDefaultWeightFloor = 1e-6;

// Proximal weights per vertex: 2 deg(j), 2 sqrt(deg(j)) or `constant`, each
// raised to at least `floor`. Throws ConfigError if floor <= 0.
std::vector<double> ProximalWeights(const Graph& g, WeightMode mode,
                                    double constant = 1.0,
                                    double floor = kDefaultWeightFloor);

}  // namespace dks

#endif  // DKS_SUBPROBLEM_HPP_
