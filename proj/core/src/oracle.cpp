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

#include "dks/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "dks/errors.hpp"

namespace dks {

double BinomialCount(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::int64_t i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
    if (!std::isfinite(c)) return std::numeric_limits<double>::infinity();
  }
  return std::round(c);
}

namespace {

// Edges between v and the current member set (v itself excluded).
std::int64_t LinksInto(const Graph& g, VertexId v,
                       const std::vector<char>& member) {
  std::int64_t links = 0;
  for (VertexId u : g.neighbors(v)) links += member[u];
  return links;
}

}  // namespace

OracleResult ExhaustiveDks(const Graph& g, int k, double max_subsets) {
  const VertexId n = g.num_vertices();
  if (k < 0 || k > n) {
    throw ConfigError("oracle needs 0 <= k <= n, got k = " + std::to_string(k));
  }
  const double total = BinomialCount(n, k);
  if (total > max_subsets) {
    throw GuardExceeded("C(" + std::to_string(n) + ", " + std::to_string(k) +
                        ") subsets exceed the exhaustive oracle limit; use the "
                        "heuristic solver instead");
  }

  OracleResult result;
  if (k <= 1 || k == n) {
    result.argmax_set.resize(static_cast<std::size_t>(k));
    std::iota(result.argmax_set.begin(), result.argmax_set.end(), 0);
    result.optimum = k == n ? g.num_edges() : 0;
    result.subsets_examined = static_cast<std::int64_t>(total);
    return result;
  }

  // Knuth's Algorithm R (revolving-door combinations), 1-based with sentinel
  // c[t + 1] = n. Every step replaces exactly one member.
  const int t = k;
  std::vector<VertexId> c(static_cast<std::size_t>(t) + 2);
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (int j = 1; j <= t; ++j) {
    c[j] = j - 1;
    member[j - 1] = 1;
  }
  c[t + 1] = n;

  std::int64_t count = 0;
  for (int j = 1; j <= t; ++j) {
    for (VertexId u : g.neighbors(c[j])) count += (u < c[j]) && member[u];
  }

  auto record = [&]() {
    ++result.subsets_examined;
    if (result.subsets_examined == 1 || count > result.optimum) {
      result.optimum = count;
      result.argmax_set.assign(c.begin() + 1, c.begin() + t + 1);
    }
  };
  auto swap_members = [&](VertexId out, VertexId in) {
    if (!member[out] || member[in]) {
      throw std::logic_error("revolving-door enumeration lost track of members");
    }
    count -= LinksInto(g, out, member);
    member[out] = 0;
    count += LinksInto(g, in, member);
    member[in] = 1;
  };

  const bool odd = (t % 2) != 0;
  for (;;) {
    record();
    // R3: easy cases move c[1] by one.
    if (odd) {
      if (c[1] + 1 < c[2]) {
        swap_members(c[1], c[1] + 1);
        ++c[1];
        continue;
      }
    } else if (c[1] > 0) {
      swap_members(c[1], c[1] - 1);
      --c[1];
      continue;
    }
    int j = 2;
    bool try_decrease = odd;
    bool moved = false;
    while (j <= t) {
      if (try_decrease) {
        // R4: here c[j] == c[j-1] + 1.
        if (c[j] >= j) {
          swap_members(c[j], j - 2);
          c[j] = c[j - 1];
          c[j - 1] = j - 2;
          moved = true;
          break;
        }
        ++j;
        try_decrease = false;
      } else {
        // R5: here c[j-1] == j - 2.
        if (c[j] + 1 < c[j + 1]) {
          swap_members(c[j - 1], c[j] + 1);
          c[j - 1] = c[j];
          ++c[j];
          moved = true;
          break;
        }
        ++j;
        try_decrease = true;
      }
    }
    if (!moved) break;
  }

  std::sort(result.argmax_set.begin(), result.argmax_set.end());
  return result;
}

std::vector<VertexId> GreedyPeel(const Graph& g, int k) {
  const VertexId n = g.num_vertices();
  if (k < 0 || k > n) {
    throw ConfigError("peeling needs 0 <= k <= n, got k = " + std::to_string(k));
  }
  std::vector<VertexId> degree(g.degrees().begin(), g.degrees().end());
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::set<std::pair<VertexId, VertexId>> queue;
  for (VertexId v = 0; v < n; ++v) queue.emplace(degree[v], v);

  for (VertexId remaining = n; remaining > k; --remaining) {
    const VertexId v = queue.begin()->second;
    queue.erase(queue.begin());
    alive[v] = 0;
    for (VertexId u : g.neighbors(v)) {
      if (!alive[u]) continue;
      queue.erase({degree[u], u});
      --degree[u];
      queue.emplace(degree[u], u);
    }
  }

  std::vector<VertexId> survivors;
  survivors.reserve(static_cast<std::size_t>(k));
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) survivors.push_back(v);
  }
  return survivors;
}

}  // namespace dks
