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

#ifndef DKS_GENERATOR_HPP_
#define DKS_GENERATOR_HPP_

#include <cstdint>
#include <vector>

#include "dks/graph.hpp"

namespace dks {

enum class GraphKind { kErdosRenyi, kPlanted };

struct GeneratorSpec {
  GraphKind kind = GraphKind::kErdosRenyi;
  VertexId n = 0;
  double p = 0.5;
  // Size of the planted clique; ignored for kErdosRenyi.
  VertexId planted_k = 0;
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  Graph graph;
  // Sorted planted clique vertices; empty for kErdosRenyi.
  std::vector<VertexId> planted;
};

// Above this vertex count G_p(n) is sampled by geometric skipping over the
// pair sequence instead of one Bernoulli trial per pair.
inline constexpr VertexId kDensePairLoopLimit = VertexId{1} << 13;

// G_p(n), or G_p(n) with a clique forced onto a uniformly chosen planted_k
// subset. Deterministic in spec.seed. Throws ConfigError on an invalid spec.
GeneratedInstance Generate(const GeneratorSpec& spec);

void ValidateSpec(const GeneratorSpec& spec);

}  // namespace dks

#endif  // DKS_GENERATOR_HPP_
