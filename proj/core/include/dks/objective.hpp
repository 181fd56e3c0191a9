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

#ifndef DKS_OBJECTIVE_HPP_
#define DKS_OBJECTIVE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

// A point of the relaxation {x : sum x = k, 0 <= x <= 1}.
struct FeasiblePoint {
  std::vector<double> x;
  int k = 0;

  double sum() const;
  bool IsFeasible(double tol = 1e-9) const;
};

inline constexpr int kDefaultRecomputePeriod = 1024;

// Incrementally maintained f(x) = x^T A x together with y = A x.
//
// The gradient of f is 2 y. Updates push coordinate deltas along neighbor
// lists; every `recompute_period` updates the whole state is recomputed from
// scratch to bound floating-point drift.
class ObjectiveCache {
 public:
  const FeasiblePoint& point() const { return point_; }
  std::span<const double> x() const { return point_.x; }
  std::span<const double> y() const { return y_; }
  double value() const { return f_; }
  int stale_counter() const { return stale_counter_; }
  int recompute_period() const { return recompute_period_; }

 private:
  friend ObjectiveCache FullEvaluate(const Graph&, FeasiblePoint, int);
  friend void ApplyUpdate(const Graph&, ObjectiveCache&,
                          std::span<const VertexId>, std::span<const double>);
  friend void Recompute(const Graph&, ObjectiveCache&);

  FeasiblePoint point_;
  std::vector<double> y_;
  double f_ = 0.0;
  int stale_counter_ = 0;
  int recompute_period_ = kDefaultRecomputePeriod;
  // Position+1 of each coordinate in the current update set, 0 otherwise.
  std::vector<std::int32_t> slot_;
  std::vector<double> delta_;
};

// x^T A x for an arbitrary vector (no cache). O(m).
double Evaluate(const Graph& g, std::span<const double> x);

// Exact y and f from scratch. Throws ConfigError on a length mismatch or a
// non-positive recompute period.
ObjectiveCache FullEvaluate(const Graph& g, FeasiblePoint x,
                            int recompute_period = kDefaultRecomputePeriod);

// Replaces the cached state by an exact recomputation.
void Recompute(const Graph& g, ObjectiveCache& cache);

// Sets x_j = values[i] for j = coords[i]. Cost O(sum of deg j). Throws
// ConfigError on size mismatch, out-of-range or repeated coordinates.
void ApplyUpdate(const Graph& g, ObjectiveCache& cache,
                 std::span<const VertexId> coords,
                 std::span<const double> values);

// (2 y_j) for j in coords.
void PartialGradient(const ObjectiveCache& cache,
                     std::span<const VertexId> coords, std::span<double> out);
std::vector<double> PartialGradient(const ObjectiveCache& cache,
                                    std::span<const VertexId> coords);

}  // namespace dks

#endif  // DKS_OBJECTIVE_HPP_
