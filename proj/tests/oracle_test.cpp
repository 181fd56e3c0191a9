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
#include <numeric>
#include <random>

#include "dks/errors.hpp"
#include "dks/generator.hpp"
#include "gtest/gtest.h"
#include "test_oracles.hpp"

namespace dks {
namespace {

TEST(ExhaustiveDksTest, CompleteGraph) {
  const Graph k5 = Generate({GraphKind::kErdosRenyi, 5, 1.0, 0, 0}).graph;
  const auto res = ExhaustiveDks(k5, 3);
  EXPECT_EQ(res.optimum, 3);
  EXPECT_EQ(res.subsets_examined, 10);
  EXPECT_EQ(InducedEdgeCount(k5, res.argmax_set), 3);
}

TEST(ExhaustiveDksTest, PlantedClique) {
  const auto inst = Generate({GraphKind::kPlanted, 12, 0.2, 5, 3});
  const auto res = ExhaustiveDks(inst.graph, 5);
  EXPECT_EQ(res.optimum, 10);
}

TEST(ExhaustiveDksTest, MatchesNaiveEnumeration) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const VertexId n = 6 + static_cast<VertexId>(rng() % 9);
    const int k = 2 + static_cast<int>(rng() % std::min<VertexId>(6, n - 2));
    const double p = 0.2 + 0.6 * (rng() % 1000) / 1000.0;
    const Graph g = Generate({GraphKind::kErdosRenyi, n, p, 0, rng()}).graph;
    const auto res = ExhaustiveDks(g, k);
    ASSERT_EQ(res.optimum, testing::NaiveDks(g, k))
        << "n = " << n << ", k = " << k;
    EXPECT_EQ(res.subsets_examined,
              static_cast<std::int64_t>(BinomialCount(n, k)));
    EXPECT_EQ(InducedEdgeCount(g, res.argmax_set), res.optimum);
    EXPECT_EQ(static_cast<int>(res.argmax_set.size()), k);
  }
}

TEST(ExhaustiveDksTest, DominatesRandomSubsets) {
  const Graph g = Generate({GraphKind::kErdosRenyi, 16, 0.4, 0, 5}).graph;
  const auto res = ExhaustiveDks(g, 6);
  std::mt19937_64 rng(1);
  std::vector<VertexId> all(16);
  std::iota(all.begin(), all.end(), 0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(all.begin(), all.end(), rng);
    std::span<const VertexId> s(all.data(), 6);
    EXPECT_LE(InducedEdgeCount(g, s), res.optimum);
  }
}

TEST(ExhaustiveDksTest, Guard) {
  const Graph g = Generate({GraphKind::kErdosRenyi, 60, 0.5, 0, 1}).graph;
  EXPECT_THROW(ExhaustiveDks(g, 30), GuardExceeded);
  EXPECT_THROW(ExhaustiveDks(g, 4, 1000.0), GuardExceeded);
  EXPECT_THROW(ExhaustiveDks(g, 61), ConfigError);
}

TEST(ExhaustiveDksTest, DegenerateSizes) {
  const Graph g = Generate({GraphKind::kErdosRenyi, 7, 0.5, 0, 9}).graph;
  EXPECT_EQ(ExhaustiveDks(g, 0).optimum, 0);
  EXPECT_EQ(ExhaustiveDks(g, 1).optimum, 0);
  EXPECT_EQ(ExhaustiveDks(g, 7).optimum, g.num_edges());
  EXPECT_EQ(ExhaustiveDks(g, 6).optimum, testing::NaiveDks(g, 6));
}

TEST(BinomialCountTest, Values) {
  EXPECT_EQ(BinomialCount(5, 3), 10.0);
  EXPECT_NEAR(BinomialCount(60, 30) / 118264581564861424.0, 1.0, 1e-12);
  EXPECT_EQ(BinomialCount(3, 4), 0.0);
}

TEST(GreedyPeelTest, FindsCliqueAmongIsolatedVertices) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 5; ++u) {
    for (VertexId v = u + 1; v < 5; ++v) edges.emplace_back(u + 3, v + 3);
  }
  const Graph g = Graph::FromEdges(12, edges);
  EXPECT_EQ(GreedyPeel(g, 5), (std::vector<VertexId>{3, 4, 5, 6, 7}));
}

TEST(GreedyPeelTest, PathKeepsAdjacentPair) {
  const std::vector<Edge> path = {{0, 1}, {1, 2}, {2, 3}};
  const Graph g = Graph::FromEdges(4, path);
  // Peel order: 0 (deg 1), then 1 (deg 1 after removal, lowest index).
  const auto s = GreedyPeel(g, 2);
  EXPECT_EQ(s, (std::vector<VertexId>{2, 3}));
  EXPECT_EQ(InducedEdgeCount(g, s), 1);
}

TEST(GreedyPeelTest, NeverBeatsOptimum) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = Generate({GraphKind::kErdosRenyi, 14, 0.4, 0, seed}).graph;
    const auto s = GreedyPeel(g, 6);
    EXPECT_EQ(s.size(), 6u);
    EXPECT_LE(InducedEdgeCount(g, s), ExhaustiveDks(g, 6).optimum);
  }
}

}  // namespace
}  // namespace dks
