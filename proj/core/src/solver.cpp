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

#include "dks/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "dks/errors.hpp"

namespace dks {

std::string_view ToString(Algorithm a) {
  return a == Algorithm::kRcc1 ? "rcc1" : "rcc2";
}

std::string_view ToString(InitKind k) {
  switch (k) {
    case InitKind::kAuto:
      return "auto";
    case InitKind::kRandomSimplex:
      return "random";
    case InitKind::kUniform:
      return "uniform";
  }
  return "?";
}

std::string_view ToString(TerminationReason r) {
  switch (r) {
    case TerminationReason::kMaxIters:
      return "max_iters";
    case TerminationReason::kIntegerPointFound:
      return "integer_point_found";
    case TerminationReason::kObjectiveStalled:
      return "objective_stalled";
  }
  return "?";
}

std::string_view ToString(WeightMode m) {
  switch (m) {
    case WeightMode::kDegree:
      return "degree";
    case WeightMode::kSqrtDegree:
      return "sqrt";
    case WeightMode::kConstant:
      return "const";
  }
  return "?";
}

void ValidateConfig(const SolverConfig& cfg, VertexId n) {
  if (cfg.k < 3 || cfg.k > n - 2) {
    throw ConfigError("k must satisfy 3 <= k <= n-2 (n = " + std::to_string(n) +
                      "), got k = " + std::to_string(cfg.k));
  }
  if (cfg.q < 2 || cfg.q > n) {
    throw ConfigError("q must satisfy 2 <= q <= n (n = " + std::to_string(n) +
                      "), got q = " + std::to_string(cfg.q));
  }
  if (cfg.max_iters < 0) throw ConfigError("iteration budget must be >= 0");
  if (cfg.max_restarts < 1) throw ConfigError("restart budget must be >= 1");
  if (!(cfg.int_tol >= 0.0 && cfg.int_tol < 0.5)) {
    throw ConfigError("integer tolerance must lie in [0, 0.5)");
  }
  if (cfg.recompute_period <= 0) {
    throw ConfigError("recompute period must be positive");
  }
  if (!(cfg.weight_floor > 0.0)) {
    throw ConfigError("weight floor must be positive");
  }
  if (cfg.weight_mode == WeightMode::kConstant && !(cfg.weight_constant > 0.0)) {
    throw ConfigError("constant proximal weight must be positive");
  }
}

InitKind ResolveInit(InitKind init, VertexId n) {
  if (init != InitKind::kAuto) return init;
  return n <= (VertexId{1} << 13) ? InitKind::kRandomSimplex
                                  : InitKind::kUniform;
}

CoordinateSampler::CoordinateSampler(VertexId n)
    : perm_(static_cast<std::size_t>(n)) {
  std::iota(perm_.begin(), perm_.end(), 0);
}

std::span<const VertexId> CoordinateSampler::Sample(int q, Rng& rng) {
  const auto n = static_cast<std::uint64_t>(perm_.size());
  if (q < 0 || static_cast<std::uint64_t>(q) > n) {
    throw ConfigError("cannot sample " + std::to_string(q) + " of " +
                      std::to_string(n) + " coordinates");
  }
  for (int i = 0; i < q; ++i) {
    const auto j = i + UniformBelow(rng, n - static_cast<std::uint64_t>(i));
    std::swap(perm_[i], perm_[j]);
  }
  chosen_.assign(perm_.begin(), perm_.begin() + q);
  std::sort(chosen_.begin(), chosen_.end());
  return chosen_;
}

std::vector<double> ProjectCappedSimplex(std::span<const double> v, double k) {
  const std::vector<double> ones(v.size(), 1.0);
  const std::vector<double> zeros(v.size(), 0.0);
  SubproblemInstance inst{v, zeros, ones, k};
  return SolveQuadratic(inst).values;
}

FeasiblePoint InitialPoint(VertexId n, int k, InitKind init, Rng& rng) {
  FeasiblePoint p;
  p.k = k;
  if (ResolveInit(init, n) == InitKind::kUniform) {
    p.x.assign(static_cast<std::size_t>(n),
               static_cast<double>(k) / static_cast<double>(n));
    return p;
  }
  std::vector<double> sample(static_cast<std::size_t>(n));
  for (double& s : sample) s = UniformUnit(rng);
  p.x = ProjectCappedSimplex(sample, k);
  return p;
}

bool IsIntegerPoint(std::span<const double> x, int k, double tol) {
  std::int64_t ones = 0;
  for (double v : x) {
    const double r = std::round(v);
    if (std::abs(v - r) > tol) return false;
    if (r == 1.0) ++ones;
  }
  return ones == k;
}

std::vector<VertexId> RoundToInteger(const Graph& g, const FeasiblePoint& x) {
  const auto n = static_cast<VertexId>(x.x.size());
  if (n != g.num_vertices()) {
    throw ConfigError("point and graph differ in dimension");
  }
  const VertexId k = std::clamp<VertexId>(x.k, 0, n);
  std::vector<VertexId> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::partial_sort(order.begin(), order.begin() + k, order.end(),
                    [&](VertexId a, VertexId b) {
                      if (x.x[a] != x.x[b]) return x.x[a] > x.x[b];
                      if (g.degree(a) != g.degree(b)) {
                        return g.degree(a) > g.degree(b);
                      }
                      return a < b;
                    });
  order.resize(static_cast<std::size_t>(k));
  std::sort(order.begin(), order.end());
  return order;
}

namespace {

// Tracks how many coordinates are away from {0, 1} and how many sit at 1, so
// the integrality test costs O(q) per iteration.
class IntegralityTracker {
 public:
  IntegralityTracker(std::span<const double> x, double tol)
      : tol_(tol), state_(x.size()) {
    for (std::size_t j = 0; j < x.size(); ++j) Add(j, x[j]);
  }

  void Update(std::size_t j, double value) {
    Remove(j);
    Add(j, value);
  }

  bool IsInteger(int k) const { return fractional_ == 0 && ones_ == k; }

 private:
  enum : char { kZero, kOne, kFractional };

  void Add(std::size_t j, double v) {
    if (std::abs(v) <= tol_) {
      state_[j] = kZero;
    } else if (std::abs(v - 1.0) <= tol_) {
      state_[j] = kOne;
      ++ones_;
    } else {
      state_[j] = kFractional;
      ++fractional_;
    }
  }
  void Remove(std::size_t j) {
    if (state_[j] == kOne) --ones_;
    if (state_[j] == kFractional) --fractional_;
  }

  double tol_;
  std::vector<char> state_;
  std::int64_t ones_ = 0;
  std::int64_t fractional_ = 0;
};

}  // namespace

SingleRunResult RunSingle(const Graph& g, const SolverConfig& cfg,
                          FeasiblePoint x0, std::span<const double> weights,
                          Rng& rng, const IterationObserver& observer) {
  const VertexId n = g.num_vertices();
  ValidateConfig(cfg, n);
  if (x0.x.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("initial point has the wrong dimension");
  }
  x0.k = cfg.k;
  if (!x0.IsFeasible(1e-9)) throw ConfigError("initial point is infeasible");
  const bool quadratic = cfg.algorithm == Algorithm::kRcc1;
  if (quadratic && weights.size() != static_cast<std::size_t>(n)) {
    throw ConfigError("rcc1 needs one proximal weight per vertex");
  }

  ObjectiveCache cache = FullEvaluate(g, std::move(x0), cfg.recompute_period);
  IntegralityTracker integrality(cache.x(), cfg.int_tol);
  CoordinateSampler sampler(n);

  SingleRunResult out;
  out.best_value = cache.value();

  const auto q = static_cast<std::size_t>(cfg.q);
  std::vector<double> grad(q), current(q), local_weights(q);
  auto finish = [&](TerminationReason reason) {
    out.termination = reason;
    out.final_value = cache.value();
    out.x = cache.point();
    return out;
  };

  if (integrality.IsInteger(cfg.k)) {
    return finish(TerminationReason::kIntegerPointFound);
  }

  for (std::int64_t it = 1; it <= cfg.max_iters; ++it) {
    const auto coords = sampler.Sample(cfg.q, rng);
    PartialGradient(cache, coords, grad);
    double target = 0.0;
    for (std::size_t i = 0; i < q; ++i) {
      current[i] = cache.x()[coords[i]];
      target += current[i];
      if (quadratic) local_weights[i] = weights[coords[i]];
    }
    const SubproblemInstance inst{grad, current, local_weights, target};
    const SubproblemResult res =
        quadratic ? SolveQuadratic(inst) : SolveLinear(inst);

    const double previous = cache.value();
    ApplyUpdate(g, cache, coords, res.values);
    for (std::size_t i = 0; i < q; ++i) {
      integrality.Update(static_cast<std::size_t>(coords[i]), res.values[i]);
    }
    out.iterations = it;
    out.best_value = std::max(out.best_value, cache.value());
    if (observer) observer(it, cache);

    if (integrality.IsInteger(cfg.k)) {
      return finish(TerminationReason::kIntegerPointFound);
    }
    if (quadratic && cfg.obj_tol > 0.0 &&
        std::abs(cache.value() - previous) < cfg.obj_tol) {
      return finish(TerminationReason::kObjectiveStalled);
    }
  }
  return finish(TerminationReason::kMaxIters);
}

RunReport Run(const Graph& g, const SolverConfig& cfg) {
  const VertexId n = g.num_vertices();
  ValidateConfig(cfg, n);
  const auto start = std::chrono::steady_clock::now();

  std::vector<double> weights;
  if (cfg.algorithm == Algorithm::kRcc1) {
    weights = ProximalWeights(g, cfg.weight_mode, cfg.weight_constant,
                              cfg.weight_floor);
  }
  const InitKind init = ResolveInit(cfg.init, n);
  const double clique_value = static_cast<double>(cfg.k) * (cfg.k - 1);

  RunReport report;
  report.best_bound = -std::numeric_limits<double>::infinity();
  for (int restart = 0; restart < cfg.max_restarts; ++restart) {
    Rng rng(DeriveSeed(cfg.seed, static_cast<std::uint64_t>(restart)));
    FeasiblePoint x0 = InitialPoint(n, cfg.k, init, rng);

    SingleRunResult single = RunSingle(g, cfg, std::move(x0), weights, rng);
    report.best_bound = std::max(report.best_bound, single.best_value);
    report.iterations_total += single.iterations;
    report.terminations.push_back(single.termination);
    ++report.restarts_used;

    auto vertices = RoundToInteger(g, single.x);
    const auto value = 2.0 * static_cast<double>(InducedEdgeCount(g, vertices));
    if (!report.best_integer_value || value > *report.best_integer_value) {
      report.best_integer_value = value;
      report.best_vertex_set = std::move(vertices);
    }
    if (*report.best_integer_value >= clique_value) {
      report.is_clique_certified = true;
      break;
    }
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

double PercentDeviation(double best_value, double found_value) {
  if (!(best_value > 0.0)) {
    throw ConfigError("reference value must be positive");
  }
  return (best_value - found_value) / best_value * 100.0;
}

}  // namespace dks
