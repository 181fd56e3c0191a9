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

#ifndef DKS_ORACLE_HPP_
#define DKS_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

struct OracleResult {
  // Largest induced edge count over all k-subsets.
  std::int64_t optimum = 0;
  std::vector<VertexId> argmax_set;
  std::int64_t subsets_examined = 0;
};

inline constexpr double kMaxOracleSubsets = 1e8;

// C(n, k) as a double (saturates to +inf).
double BinomialCount(std::int64_t n, std::int64_t k);

// Exact densest k-subgraph by revolving-door enumeration of all k-subsets,
// one swap per step. Throws GuardExceeded if C(n, k) > max_subsets and
// ConfigError if k is outside [0, n].
OracleResult ExhaustiveDks(const Graph& g, int k,
                           double max_subsets = kMaxOracleSubsets);

// Repeatedly deletes a minimum-degree vertex (lowest index on ties) until k
// remain. Returns the survivors, sorted.
std::vector<VertexId> GreedyPeel(const Graph& g, int k);

}  // namespace dks

#endif  // DKS_ORACLE_HPP_
