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

#include "dks/objective.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "dks/errors.hpp"

namespace dks {

double FeasiblePoint::sum() const {
  return std::accumulate(x.begin(), x.end(), 0.0);
}

bool FeasiblePoint::IsFeasible(double tol) const {
  for (double v : x) {
    if (!(v >= -tol && v <= 1.0 + tol)) return false;
  }
  return std::abs(sum() - static_cast<double>(k)) <= tol;
}

double Evaluate(const Graph& g, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw ConfigError("point has " + std::to_string(x.size()) +
                      " coordinates, graph has " +
                      std::to_string(g.num_vertices()) + " vertices");
  }
  double f = 0.0;
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    if (x[i] == 0.0) continue;
    double yi = 0.0;
    for (VertexId j : g.neighbors(i)) yi += x[j];
    f += x[i] * yi;
  }
  return f;
}

void Recompute(const Graph& g, ObjectiveCache& cache) {
  const auto& x = cache.point_.x;
  const VertexId n = g.num_vertices();
  cache.y_.assign(static_cast<std::size_t>(n), 0.0);
  double f = 0.0;
  for (VertexId i = 0; i < n; ++i) {
    double yi = 0.0;
    for (VertexId j : g.neighbors(i)) yi += x[j];
    cache.y_[i] = yi;
    f += x[i] * yi;
  }
  cache.f_ = f;
  cache.stale_counter_ = 0;
}

ObjectiveCache FullEvaluate(const Graph& g, FeasiblePoint x,
                            int recompute_period) {
  if (x.x.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw ConfigError("point has " + std::to_string(x.x.size()) +
                      " coordinates, graph has " +
                      std::to_string(g.num_vertices()) + " vertices");
  }
  if (recompute_period <= 0) {
    throw ConfigError("recompute period must be positive");
  }
  ObjectiveCache cache;
  cache.point_ = std::move(x);
  cache.recompute_period_ = recompute_period;
  cache.slot_.assign(static_cast<std::size_t>(g.num_vertices()), 0);
  Recompute(g, cache);
  return cache;
}

void ApplyUpdate(const Graph& g, ObjectiveCache& cache,
                 std::span<const VertexId> coords,
                 std::span<const double> values) {
  if (coords.size() != values.size()) {
    throw ConfigError("update has " + std::to_string(coords.size()) +
                      " coordinates but " + std::to_string(values.size()) +
                      " values");
  }
  const VertexId n = g.num_vertices();
  auto& x = cache.point_.x;
  auto& slot = cache.slot_;
  auto& delta = cache.delta_;
  delta.resize(coords.size());

  for (std::size_t i = 0; i < coords.size(); ++i) {
    const VertexId j = coords[i];
    if (j < 0 || j >= n || slot[j] != 0) {
      for (std::size_t r = 0; r < i; ++r) slot[coords[r]] = 0;
      throw ConfigError(j < 0 || j >= n
                            ? "coordinate " + std::to_string(j) +
                                  " out of range"
                            : "coordinate " + std::to_string(j) + " repeated");
    }
    slot[j] = static_cast<std::int32_t>(i + 1);
    delta[i] = values[i] - x[j];
  }

  // f(x + d) = f(x) + 2 y^T d + d^T A d, with d supported on coords.
  double linear = 0.0;
  double quadratic = 0.0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double d = delta[i];
    if (d == 0.0) continue;
    const VertexId j = coords[i];
    linear += cache.y_[j] * d;
    double coupled = 0.0;
    for (VertexId nb : g.neighbors(j)) {
      if (slot[nb] != 0) coupled += delta[slot[nb] - 1];
    }
    quadratic += d * coupled;
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const double d = delta[i];
    const VertexId j = coords[i];
    slot[j] = 0;
    if (d == 0.0) continue;
    x[j] = values[i];
    for (VertexId nb : g.neighbors(j)) cache.y_[nb] += d;
  }
  cache.f_ += 2.0 * linear + quadratic;

  if (++cache.stale_counter_ >= cache.recompute_period_) Recompute(g, cache);
}

void PartialGradient(const ObjectiveCache& cache,
                     std::span<const VertexId> coords, std::span<double> out) {
  if (out.size() != coords.size()) {
    throw ConfigError("gradient output has the wrong length");
  }
  const auto y = cache.y();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const VertexId j = coords[i];
    if (j < 0 || static_cast<std::size_t>(j) >= y.size()) {
      throw ConfigError("coordinate " + std::to_string(j) + " out of range");
    }
    out[i] = 2.0 * y[j];
  }
}

std::vector<double> PartialGradient(const ObjectiveCache& cache,
                                    std::span<const VertexId> coords) {
  std::vector<double> out(coords.size());
  PartialGradient(cache, coords, out);
  return out;
}

}  // namespace dks
