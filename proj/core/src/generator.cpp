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

#include "dks/generator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "dks/errors.hpp"
#include "dks/random.hpp"

namespace dks {
namespace {

void SampleErdosRenyi(VertexId n, double p, Rng& rng, std::vector<Edge>& out) {
  if (p >= 1.0) {
    for (VertexId v = 1; v < n; ++v) {
      for (VertexId w = 0; w < v; ++w) out.emplace_back(v, w);
    }
    return;
  }
  if (n <= kDensePairLoopLimit) {
    for (VertexId v = 1; v < n; ++v) {
      for (VertexId w = 0; w < v; ++w) {
        if (UniformUnit(rng) < p) out.emplace_back(v, w);
      }
    }
    return;
  }
  // Batagelj-Brandes: geometric gaps between successive kept pairs in the
  // lexicographic order (v, w), w < v.
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = UniformUnit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) {
      out.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
    }
  }
}

}  // namespace

void ValidateSpec(const GeneratorSpec& spec) {
  if (spec.n < 2) {
    throw ConfigError("generator needs n >= 2, got " + std::to_string(spec.n));
  }
  if (!(spec.p > 0.0 && spec.p <= 1.0)) {
    throw ConfigError("edge probability must lie in (0, 1], got " +
                      std::to_string(spec.p));
  }
  if (spec.kind == GraphKind::kPlanted &&
      (spec.planted_k < 3 || spec.planted_k > spec.n)) {
    throw ConfigError("planted clique size must lie in [3, n], got " +
                      std::to_string(spec.planted_k));
  }
}

GeneratedInstance Generate(const GeneratorSpec& spec) {
  ValidateSpec(spec);
  Rng rng(spec.seed);
  std::vector<Edge> edges;
  const double expected =
      spec.p * 0.5 * static_cast<double>(spec.n) * (spec.n - 1);
  edges.reserve(static_cast<std::size_t>(expected * 1.05) + 16);
  SampleErdosRenyi(spec.n, spec.p, rng, edges);

  GeneratedInstance out;
  if (spec.kind == GraphKind::kPlanted) {
    std::vector<VertexId> perm(static_cast<std::size_t>(spec.n));
    std::iota(perm.begin(), perm.end(), 0);
    for (VertexId i = 0; i < spec.planted_k; ++i) {
      const auto j = i + static_cast<VertexId>(
                             UniformBelow(rng, static_cast<std::uint64_t>(
                                                   spec.n - i)));
      std::swap(perm[i], perm[j]);
    }
    out.planted.assign(perm.begin(), perm.begin() + spec.planted_k);
    std::sort(out.planted.begin(), out.planted.end());
    for (std::size_t a = 0; a < out.planted.size(); ++a) {
      for (std::size_t b = a + 1; b < out.planted.size(); ++b) {
        edges.emplace_back(out.planted[a], out.planted[b]);
      }
    }
  }
  out.graph = Graph::FromEdges(spec.n, edges);
  return out;
}

}  // namespace dks
