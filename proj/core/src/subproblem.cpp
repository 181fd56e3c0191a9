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

#include "dks/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dks/errors.hpp"

namespace dks {
namespace {

double CheckedTarget(double target, std::size_t q) {
  const auto upper = static_cast<double>(q);
  if (!(target >= -kTargetSlack && target <= upper + kTargetSlack)) {
    throw InfeasibleError("subproblem target " + std::to_string(target) +
                          " outside [0, " + std::to_string(q) + "]");
  }
  return std::clamp(target, 0.0, upper);
}

void CountActive(SubproblemResult& res) {
  res.n_lower = 0;
  res.n_upper = 0;
  for (double u : res.values) {
    if (u <= 0.0) ++res.n_lower;
    if (u >= 1.0) ++res.n_upper;
  }
}

double Clip01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

SubproblemResult SolveLinear(const SubproblemInstance& inst) {
  const std::size_t q = inst.size();
  if (inst.current.size() != q) {
    throw ConfigError("gradient and current values differ in length");
  }
  const double target = CheckedTarget(inst.target, q);

  std::vector<std::size_t> order(q);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return inst.gradient[a] > inst.gradient[b];
                   });

  SubproblemResult res;
  res.values.assign(q, 0.0);
  double budget = target;
  for (std::size_t idx : order) {
    if (budget <= 0.0) break;
    if (budget >= 1.0) {
      res.values[idx] = 1.0;
      budget -= 1.0;
    } else {
      res.values[idx] = budget;
      budget = 0.0;
    }
  }
  CountActive(res);
  return res;
}

SubproblemResult SolveQuadratic(const SubproblemInstance& inst) {
  const std::size_t q = inst.size();
  if (inst.current.size() != q || inst.weights.size() != q) {
    throw ConfigError("subproblem vectors differ in length");
  }
  for (double w : inst.weights) {
    if (!(w > 0.0)) throw ConfigError("proximal weights must be positive");
  }
  const double target = CheckedTarget(inst.target, q);
  const auto& c = inst.gradient;
  const auto& x = inst.current;
  const auto& L = inst.weights;

  SubproblemResult res;
  if (q == 0) return res;

  // Sum of clipped coordinates at multiplier lambda; non-increasing.
  auto fill = [&](double lambda) {
    double s = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      res.values[j] = Clip01(x[j] + (c[j] - lambda) / L[j]);
      s += res.values[j];
    }
    return s;
  };
  res.values.assign(q, 0.0);

  if (target <= 0.0 || target >= static_cast<double>(q)) {
    const bool ones = target > 0.0;
    double dual = ones ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < q; ++j) {
      res.values[j] = ones ? 1.0 : 0.0;
      dual = ones ? std::min(dual, c[j] - L[j] * (1.0 - x[j]))
                  : std::max(dual, c[j] + L[j] * x[j]);
    }
    res.dual = dual;
    CountActive(res);
    return res;
  }

  // At lo every coordinate clips to 1, at hi every coordinate clips to 0.
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < q; ++j) {
    lo = std::min(lo, c[j] - L[j] * (2.0 - x[j]));
    hi = std::max(hi, c[j] + L[j] * (x[j] + 1.0));
  }

  double lambda = 0.5 * (lo + hi);
  for (int it = 0; it < 400; ++it) {
    lambda = 0.5 * (lo + hi);
    const double s = fill(lambda);
    if (std::abs(s - target) <= 1e-10) break;
    if (s > target) {
      lo = lambda;
    } else {
      hi = lambda;
    }
    if (hi - lo <= 1e-14 * (1.0 + std::abs(lambda))) break;
  }

  // The sum is affine in lambda on the current active set; a Newton step over
  // the free coordinates lands on the root exactly when the set is unchanged.
  double s = fill(lambda);
  double best_lambda = lambda;
  double best_gap = std::abs(s - target);
  for (int it = 0; it < 8 && best_gap > 1e-12; ++it) {
    double slope = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      if (res.values[j] > 0.0 && res.values[j] < 1.0) slope += 1.0 / L[j];
    }
    if (slope == 0.0) break;
    lambda += (s - target) / slope;
    s = fill(lambda);
    if (std::abs(s - target) < best_gap) {
      best_gap = std::abs(s - target);
      best_lambda = lambda;
    }
  }
  lambda = best_lambda;
  s = fill(lambda);
  if (std::abs(s - target) > kTargetSlack) {
    throw InfeasibleError("water-filling failed to meet the subproblem target");
  }
  res.dual = lambda;
  CountActive(res);
  return res;
}

std::vector<double> ProximalWeights(const Graph& g, WeightMode mode,
                                    double constant, double floor) {
  if (!(floor > 0.0)) throw ConfigError("weight floor must be positive");
  std::vector<double> w(static_cast<std::size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto deg = static_cast<double>(g.degree(v));
    double value = constant;
    switch (mode) {
      case WeightMode::kDegree:
        value = 2.0 * deg;
        break;
      case WeightMode::kSqrtDegree:
        value = 2.0 * std::sqrt(deg);
        break;
      case WeightMode::kConstant:
        break;
    }
    w[v] = std::max(value, floor);
  }
  return w;
}

}  // namespace dks
