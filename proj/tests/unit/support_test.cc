// Copyright 2026 The pmpspec Authors.
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

#include <gtest/gtest.h>

#include <numeric>
#include <unordered_set>

#include "graph_enum.h"
#include "oracles.h"
#include "pmp/generators.h"
#include "pmp/random.h"

namespace pmp::testing {
namespace {

SmallGraph Permuted(const SmallGraph& g, const std::vector<int>& perm) {
  SmallGraph h;
  h.n = g.n;
  for (int u = 0; u < g.n; ++u) {
    for (int v = 0; v < g.n; ++v) {
      if (g.adj[u] >> v & 1) h.adj[perm[u]] |= uint32_t{1} << perm[v];
    }
  }
  return h;
}

TEST(GraphEnumTest, ClassCountsMatchKnownSequences) {
  const size_t all[] = {1, 2, 4, 11, 34, 156, 1044, 12346};
  const size_t connected[] = {1, 1, 2, 6, 21, 112, 853, 11117};
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(GraphClasses(n).size(), all[n - 1]) << n;
    EXPECT_EQ(ConnectedGraphs(n).size(), connected[n - 1]) << n;
  }
}

TEST(GraphEnumTest, CanonicalCodeIsInvariantUnderRelabeling) {
  Rng rng(1);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = rng.Int(1, kMaxEnumOrder);
    const uint64_t bits = n < 2 ? 0 : rng.Next() & ((uint64_t{1} << (n * (n - 1) / 2)) - 1);
    const SmallGraph g = FromCode(n, bits);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.Shuffle(perm);
    EXPECT_EQ(CanonicalCode(g), CanonicalCode(Permuted(g, perm)));
    // The canonical code describes an isomorphic graph.
    const SmallGraph c = FromCode(n, CanonicalCode(g));
    EXPECT_EQ(CanonicalCode(c), CanonicalCode(g));
    EXPECT_EQ(std::popcount(RawCode(c)), std::popcount(bits));
  }
}

TEST(GraphEnumTest, SymmetricGraphsCanonicalize) {
  auto small = [](const Graph& g) {
    SmallGraph s;
    s.n = g.order();
    for (const Edge& e : g.edges()) {
      s.adj[e.u] |= uint32_t{1} << e.v;
      s.adj[e.v] |= uint32_t{1} << e.u;
    }
    return s;
  };
  const SmallGraph p = small(Petersen());
  std::vector<int> perm = {3, 1, 4, 0, 5, 9, 2, 6, 8, 7};
  EXPECT_EQ(CanonicalCode(p), CanonicalCode(Permuted(p, perm)));
  EXPECT_NE(CanonicalCode(small(Cycle(10))), CanonicalCode(p));
  EXPECT_EQ(small(Complete(6)).ToGraph(), Complete(6));
}

TEST(GraphEnumTest, ConnectedCoverReachesEveryClass) {
  for (int n = 3; n <= 9; ++n) {
    std::unordered_set<uint64_t> seen;
    ForEachConnectedCover(n, 0, 1, [&](const SmallGraph& g) {
      EXPECT_TRUE(g.connected());
      seen.insert(CanonicalCode(g));
    });
    size_t expected = 0;
    if (n <= 8) {
      expected = ConnectedGraphs(n).size();
    } else {
      expected = 261080;
    }
    EXPECT_EQ(seen.size(), expected) << n;
  }
}

TEST(OracleTest, JacobiOnKnownSpectra) {
  EXPECT_LE(MaxDeviation(OracleAdjacencySpectrum(Complete(5)), {-1, -1, -1, -1, 4}),
            1e-12);
  EXPECT_LE(MaxDeviation(OracleLaplacianSpectrum(Cycle(4)), {0, 2, 2, 4}), 1e-12);
}

TEST(OracleTest, SmallValues) {
  EXPECT_EQ(OracleChromatic(Petersen()), 3);
  EXPECT_EQ(OracleIndependence(Petersen()), 4);
  EXPECT_FALSE(OracleBipartite(Cycle(5)));
  EXPECT_TRUE(OracleHasPerfectMatching(Masks(Petersen()), 10));
  EXPECT_EQ(OracleTutteRatio(CompleteBipartite(1, 3)), (std::pair<int, int>{3, 1}));
}

}  // namespace
}  // namespace pmp::testing
