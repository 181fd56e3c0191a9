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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails. Pass criterion numbers as arguments to run a
// subset, e.g. `acceptance 3 7`.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dks/generator.hpp"
#include "dks/objective.hpp"
#include "dks/oracle.hpp"
#include "dks/random.hpp"
#include "dks/solver.hpp"
#include "dks/subproblem.hpp"
#include "test_oracles.hpp"
#ifdef DKS_HAVE_CLI
#include "cli.hpp"
#endif

namespace dks {
namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double time_limit_s;
  std::function<Outcome()> body;
};

std::string Format(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

SolverConfig Config(Algorithm alg, int k, int q, std::int64_t iters,
                    int restarts, std::uint64_t seed) {
  SolverConfig cfg;
  cfg.algorithm = alg;
  cfg.k = k;
  cfg.q = q;
  cfg.max_iters = iters;
  cfg.max_restarts = restarts;
  cfg.seed = seed;
  return cfg;
}

// Random subproblem with a feasible current point.
struct RandomSubproblem {
  std::vector<double> c, x, L;
  double r = 0.0;

  RandomSubproblem(Rng& rng, std::size_t q) : c(q), x(q), L(q) {
    for (std::size_t j = 0; j < q; ++j) {
      c[j] = 20.0 * UniformUnit(rng) - 10.0;
      const double kind = UniformUnit(rng);
      x[j] = kind < 0.2 ? 0.0 : kind < 0.4 ? 1.0 : UniformUnit(rng);
      L[j] = 0.05 + 50.0 * UniformUnit(rng);
    }
    r = std::accumulate(x.begin(), x.end(), 0.0);
  }
  SubproblemInstance view() const { return {c, x, L, r}; }
};

Outcome SubproblemOracleEquivalence() {
  Rng rng(20260101);
  double worst_quadratic = 0.0;
  int linear_mismatches = 0;
  const int trials = 10000;
  for (int t = 0; t < trials; ++t) {
    const std::size_t q = 1 + UniformBelow(rng, 6);
    const RandomSubproblem inst(rng, q);
    const auto quad = SolveQuadratic(inst.view()).values;
    const auto quad_ref =
        testing::ActiveSetQuadraticOracle(inst.c, inst.x, inst.L, inst.r);
    for (std::size_t j = 0; j < q; ++j) {
      worst_quadratic = std::max(worst_quadratic, std::abs(quad[j] - quad_ref[j]));
    }
    const auto lin = SolveLinear(inst.view()).values;
    const auto lin_ref = testing::KnapsackVertexOracle(inst.c, inst.x, inst.r);
    for (std::size_t j = 0; j < q; ++j) {
      if (std::abs(lin[j] - lin_ref[j]) > 1e-12) {
        ++linear_mismatches;
        break;
      }
    }
  }
  return {worst_quadratic <= 1e-8 && linear_mismatches == 0,
          Format("%d instances, max |u - u_enum| = %.2e (<= 1e-8), linear "
                 "mismatches = %d",
                 trials, worst_quadratic, linear_mismatches)};
}

Outcome KktResiduals() {
  Rng rng(777);
  double worst_interior = 0.0;
  double worst_bound = 0.0;
  double worst_sum = 0.0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t q = 1 + UniformBelow(rng, 1000);
    const RandomSubproblem inst(rng, q);
    const auto res = SolveQuadratic(inst.view());
    double sum = 0.0;
    for (std::size_t j = 0; j < q; ++j) {
      const double u = res.values[j];
      sum += u;
      const double slope = inst.c[j] - inst.L[j] * (u - inst.x[j]);
      if (u > 0.0 && u < 1.0) {
        worst_interior = std::max(worst_interior, std::abs(slope - res.dual));
      } else if (u >= 1.0) {
        worst_bound = std::max(worst_bound, res.dual - slope);
      } else {
        worst_bound = std::max(worst_bound, slope - res.dual);
      }
    }
    worst_sum = std::max(worst_sum, std::abs(sum - inst.r));
  }
  return {worst_interior <= 1e-7 && worst_bound <= 1e-7 && worst_sum <= 1e-9,
          Format("interior stationarity %.2e, bound violation %.2e (<= 1e-7), "
                 "|sum u - r| %.2e (<= 1e-9)",
                 worst_interior, worst_bound, worst_sum)};
}

Outcome FeasibilityConservation() {
  const Graph g = Generate({GraphKind::kErdosRenyi, 512, 0.3, 0, 3}).graph;
  const auto weights = ProximalWeights(g, WeightMode::kDegree);
  const std::int64_t total = 10000;
  std::string detail;
  bool pass = true;
  for (auto alg : {Algorithm::kRcc1, Algorithm::kRcc2}) {
    auto cfg = Config(alg, 30, 64, total, 1, 11);
    Rng rng(DeriveSeed(cfg.seed, 0));
    double worst_sum = 0.0;
    double worst_rel = 0.0;
    int checkpoints = 0;
    int restarts = 0;
    std::int64_t done = 0;
    // Runs end early on integer points or stalls; restart from fresh points
    // until the iteration budget is spent.
    while (done < total) {
      cfg.max_iters = total - done;
      const auto x0 = InitialPoint(512, 30, InitKind::kRandomSimplex, rng);
      const auto res = RunSingle(
          g, cfg, x0, weights, rng,
          [&](std::int64_t it, const ObjectiveCache& cache) {
            worst_sum = std::max(worst_sum, std::abs(cache.point().sum() - 30.0));
            if ((done + it) % 100 == 0) {
              const double exact = Evaluate(g, cache.x());
              worst_rel = std::max(worst_rel, std::abs(cache.value() - exact) /
                                                  std::max(1.0, exact));
              ++checkpoints;
            }
          });
      done += std::max<std::int64_t>(res.iterations, 1);
      ++restarts;
    }
    pass = pass && worst_sum <= 1e-9 && worst_rel <= 1e-8 && checkpoints >= 100;
    detail += Format("%s: |sum x - k| %.2e, drift %.2e at %d checkpoints "
                     "(%d runs); ",
                     std::string(ToString(alg)).c_str(), worst_sum, worst_rel,
                     checkpoints, restarts);
  }
  return {pass, detail};
}

Outcome GradientCheck() {
  const Graph g = Generate({GraphKind::kErdosRenyi, 256, 0.2, 0, 4}).graph;
  Rng rng(404);
  std::vector<VertexId> all(256);
  std::iota(all.begin(), all.end(), 0);
  const double h = 1e-6;
  double worst = 0.0;
  for (int p = 0; p < 100; ++p) {
    const auto x = InitialPoint(256, 3 + p, InitKind::kRandomSimplex, rng);
    const auto cache = FullEvaluate(g, x);
    const auto grad = PartialGradient(cache, all);
    auto probe = x.x;
    for (VertexId j = 0; j < 256; ++j) {
      probe[j] = x.x[j] + h;
      const double up = Evaluate(g, probe);
      probe[j] = x.x[j] - h;
      const double down = Evaluate(g, probe);
      probe[j] = x.x[j];
      worst = std::max(worst, std::abs(grad[j] - (up - down) / (2 * h)));
    }
  }
  return {worst <= 1e-4,
          Format("max |grad - central difference| = %.2e (<= 1e-4)", worst)};
}

Outcome SmallInstanceOptimality() {
  int hits = 0;
  for (std::uint64_t s = 0; s < 30; ++s) {
    const Graph g = Generate({GraphKind::kErdosRenyi, 16, 0.4, 0, 500 + s}).graph;
    const auto optimum = ExhaustiveDks(g, 5).optimum;
    const auto report = Run(g, Config(Algorithm::kRcc2, 5, 8, 200, 50, 900 + s));
    if (report.best_integer_value &&
        *report.best_integer_value == 2.0 * static_cast<double>(optimum)) {
      ++hits;
    }
  }
  return {hits >= 24, Format("optimum attained on %d/30 instances (>= 24)", hits)};
}

Outcome PlantedCliqueSmallScale() {
  int certified = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const auto inst = Generate({GraphKind::kPlanted, 512, 0.25, 20, 100 + s});
    const auto report =
        Run(inst.graph, Config(Algorithm::kRcc2, 20, 64, 1000, 20, 200 + s));
    if (report.is_clique_certified && report.best_integer_value == 380.0) {
      ++certified;
    }
  }
  return {certified >= 9,
          Format("value 380 with certificate for %d/10 seeds (>= 9)", certified)};
}

Outcome PlantedCliqueLargeScale() {
  const auto inst = Generate({GraphKind::kPlanted, 4096, 0.3, 100, 4096});
  const auto report =
      Run(inst.graph, Config(Algorithm::kRcc2, 100, 400, 1000, 30, 17));
  const bool hit = report.best_integer_value == 9900.0;
  return {hit,
          Format("best integer value %.0f (target 9900) after %d restart(s), "
                 "%.2f s in the solver",
                 report.best_integer_value.value_or(-1.0),
                 report.restarts_used, report.wall_time_seconds)};
}

Outcome IntegerPointConvergence() {
  const Graph g = Generate({GraphKind::kErdosRenyi, 1024, 0.5, 0, 1024}).graph;
  std::string detail;
  bool pass = true;
  for (int q : {100, 200, 2}) {
    int integer_runs = 0;
    int capped_runs = 0;
    for (std::uint64_t s = 0; s < 10; ++s) {
      auto cfg = Config(Algorithm::kRcc2, 30, q, 2000, 1, 300 + s);
      cfg.init = InitKind::kUniform;
      const auto report = Run(g, cfg);
      const auto reason = report.terminations.front();
      if (reason == TerminationReason::kIntegerPointFound &&
          report.iterations_total < 2000) {
        ++integer_runs;
      }
      if (reason == TerminationReason::kMaxIters) ++capped_runs;
    }
    const int counted = q == 2 ? capped_runs : integer_runs;
    pass = pass && counted >= 8;
    detail += Format("q=%d: %s in %d/10 (>= 8); ", q,
                     q == 2 ? "no integer point by 2000" : "integer point",
                     counted);
  }
  return {pass, detail};
}

Outcome BoundTrendOverQ() {
  const Graph g = Generate({GraphKind::kErdosRenyi, 1024, 0.5, 0, 2048}).graph;
  auto bound = [&](int q) {
    auto cfg = Config(Algorithm::kRcc1, 30, q, 1000, 1, 55);
    cfg.init = InitKind::kUniform;
    return Run(g, cfg).best_bound;
  };
  const double small = bound(2);
  const double large = bound(200);
  return {large >= 1.10 * small,
          Format("bound q=200: %.2f vs q=2: %.2f, ratio %.3f (>= 1.10)", large,
                 small, large / small)};
}

Outcome Determinism() {
#ifdef DKS_HAVE_CLI
  const std::vector<std::string> args = {
      "dks",  "solve", "--generate", "planted", "--n",       "512",
      "--p",  "0.25",  "--planted-k", "20",     "--k",       "20",
      "--q",  "64",    "--restarts",  "5",      "--reps",    "3",
      "--seed", "9",   "--alg",       "rcc1",   "--iters",   "300",
      "--out", "csv",  "--no-timing"};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream a, b, err;
  const int ca = cli::Main(static_cast<int>(argv.size()), argv.data(), a, err);
  const int cb = cli::Main(static_cast<int>(argv.size()), argv.data(), b, err);
  const bool same = ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty();
  return {same, Format("exit codes %d/%d, %zu-byte reports %s", ca, cb,
                       a.str().size(), same ? "identical" : "DIFFER")};
#else
  return {false, "built without the CLI"};
#endif
}

}  // namespace
}  // namespace dks

int main(int argc, char** argv) {
  using dks::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "subproblem oracle equivalence", 30, dks::SubproblemOracleEquivalence},
      {2, "KKT residuals", 10, dks::KktResiduals},
      {3, "feasibility conservation", 60, dks::FeasibilityConservation},
      {4, "gradient check", 10, dks::GradientCheck},
      {5, "small-instance optimality", 60, dks::SmallInstanceOptimality},
      {6, "planted clique, small scale", 60, dks::PlantedCliqueSmallScale},
      {7, "planted clique, large scale", 600, dks::PlantedCliqueLargeScale},
      {8, "rcc2 integer-point convergence", 180, dks::IntegerPointConvergence},
      {9, "rcc1 bound trend over q", 120, dks::BoundTrendOverQ},
      {10, "determinism", 10, dks::Determinism},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : criteria) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    dks::Outcome outcome;
    try {
      outcome = c.body();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    const bool in_time = seconds < c.time_limit_s;
    const bool pass = outcome.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] AC%-2d %-32s %7.2fs (limit %.0fs)  %s\n",
                pass ? "PASS" : "FAIL", c.id, c.name, seconds, c.time_limit_s,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
