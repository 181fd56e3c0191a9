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

#ifndef DKS_SOLVER_HPP_
#define DKS_SOLVER_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "dks/graph.hpp"
#include "dks/objective.hpp"
#include "dks/random.hpp"
#include "dks/subproblem.hpp"

namespace dks {

// rcc1 solves the proximal quadratic subproblem, rcc2 the linear one.
enum class Algorithm { kRcc1, kRcc2 };

enum class InitKind {
  // kRandomSimplex for n <= 2^13, kUniform above.
  kAuto,
  kRandomSimplex,
  // Every coordinate k/n. Restarts keep this point and re-seed the sampler.
  kUniform,
};

enum class TerminationReason { kMaxIters, kIntegerPointFound, kObjectiveStalled };

std::string_view ToString(Algorithm a);
std::string_view ToString(InitKind k);
std::string_view ToString(TerminationReason r);
std::string_view ToString(WeightMode m);

struct SolverConfig {
  Algorithm algorithm = Algorithm::kRcc2;
  int k = 0;
  int q = 2;
  std::int64_t max_iters = 1000;
  int max_restarts = 1;
  // Consecutive-objective stall tolerance (rcc1 only). <= 0 disables it.
  double obj_tol = 1e-7;
  double int_tol = 1e-6;
  std::uint64_t seed = 0;
  InitKind init = InitKind::kAuto;
  WeightMode weight_mode = WeightMode::kDegree;
  double weight_constant = 1.0;
  double weight_floor = kDefaultWeightFloor;
  int recompute_period = kDefaultRecomputePeriod;
};

// Throws ConfigError unless 3 <= k <= n-2 and 2 <= q <= n, and the budgets
// and tolerances are sane.
void ValidateConfig(const SolverConfig& cfg, VertexId n);

InitKind ResolveInit(InitKind init, VertexId n);

// Draws q distinct coordinates uniformly (partial Fisher-Yates over a
// persistent permutation). The returned set is sorted ascending.
class CoordinateSampler {
 public:
  explicit CoordinateSampler(VertexId n);

  std::span<const VertexId> Sample(int q, Rng& rng);

 private:
  std::vector<VertexId> perm_;
  std::vector<VertexId> chosen_;
};

FeasiblePoint InitialPoint(VertexId n, int k, InitKind init, Rng& rng);

// Euclidean projection of `v` onto {sum x = k, 0 <= x <= 1}.
std::vector<double> ProjectCappedSimplex(std::span<const double> v, double k);

// True when every coordinate is within tol of 0 or 1 and the rounded
// coordinates sum to k.
bool IsIntegerPoint(std::span<const double> x, int k, double tol);

// The k largest coordinates (ties: higher degree, then lower index), sorted.
std::vector<VertexId> RoundToInteger(const Graph& g, const FeasiblePoint& x);

struct SingleRunResult {
  FeasiblePoint x;
  TerminationReason termination = TerminationReason::kMaxIters;
  std::int64_t iterations = 0;
  double final_value = 0.0;
  // Largest objective over all iterates, including x0.
  double best_value = 0.0;
};

// Called after every iteration with the iteration number (1-based) and the
// current state.
using IterationObserver =
    std::function<void(std::int64_t, const ObjectiveCache&)>;

// One descent run from x0. `weights` is ignored by rcc2 and may be empty.
SingleRunResult RunSingle(const Graph& g, const SolverConfig& cfg,
                          FeasiblePoint x0, std::span<const double> weights,
                          Rng& rng, const IterationObserver& observer = {});

struct RunReport {
  double best_bound = 0.0;
  std::optional<double> best_integer_value;
  std::optional<std::vector<VertexId>> best_vertex_set;
  std::int64_t iterations_total = 0;
  int restarts_used = 0;
  double wall_time_seconds = 0.0;
  std::vector<TerminationReason> terminations;
  bool is_clique_certified = false;
};

// Up to cfg.max_restarts runs; restart i draws from the stream
// DeriveSeed(cfg.seed, i). Stops early on a clique certificate.
RunReport Run(const Graph& g, const SolverConfig& cfg);

// (best - found) / best * 100. Throws ConfigError if best <= 0.
double PercentDeviation(double best_value, double found_value);

}  // namespace dks

#endif  // DKS_SOLVER_HPP_
