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

#include "pmp/generators.h"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.h"
#include "pmp/error.h"
#include "pmp/random.h"
#include "pmp/spectral.h"

namespace pmp {
namespace {

using testing::OracleAdjacencySpectrum;

TEST(GeneratorsTest, Cycles) {
  EXPECT_EQ(Cycle(3), Complete(3));
  EXPECT_THROW(Cycle(2), Error);
  const std::vector<double> c4 = OracleAdjacencySpectrum(Cycle(4));
  EXPECT_LE(testing::MaxDeviation(c4, {-2, 0, 0, 2}), 1e-9);
  const std::vector<double> c5 = OracleAdjacencySpectrum(Cycle(5));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  EXPECT_LE(testing::MaxDeviation(c5, {-phi, -phi, phi - 1, phi - 1, 2}), 1e-9);
}

TEST(GeneratorsTest, StandardFamilies) {
  EXPECT_EQ(Complete(4).num_edges(), 6);
  EXPECT_TRUE(Complete(4).is_regular());
  EXPECT_EQ(Complete(4).max_degree(), 3);
  const Graph k23 = CompleteBipartite(2, 3);
  EXPECT_EQ(k23.degree(0), 3);
  EXPECT_EQ(k23.degree(4), 2);
  EXPECT_NEAR(OracleAdjacencySpectrum(k23).back(), std::sqrt(6.0), 1e-9);
  EXPECT_EQ(Path(2), Complete(2));
  EXPECT_THROW(Complete(0), Error);
  EXPECT_THROW(CompleteBipartite(0, 3), Error);
  EXPECT_THROW(Path(0), Error);
}

TEST(GeneratorsTest, SubdivisionExamples) {
  EXPECT_EQ(Subdivide(Complete(2)), Graph::FromEdges(3, {{0, 2}, {1, 2}}));
  EXPECT_NEAR(OracleAdjacencySpectrum(Subdivide(Complete(2))).back(),
              std::sqrt(2.0), 1e-9);
  const Graph c8 = Subdivide(Cycle(4));
  EXPECT_EQ(c8.order(), 8);
  EXPECT_TRUE(c8.is_regular());
  EXPECT_TRUE(IsConnected(c8));
  EXPECT_NEAR(OracleAdjacencySpectrum(c8).back(), 2.0, 1e-9);
  const Graph k4s = Subdivide(Complete(4));
  EXPECT_EQ(k4s.order(), 10);
  EXPECT_NEAR(OracleAdjacencySpectrum(k4s).back(), std::sqrt(6.0), 1e-9);
  EXPECT_THROW(Subdivide(Path(3)), Error);
  EXPECT_THROW(Subdivide(Graph::FromEdges(2, {})), Error);
}

TEST(GeneratorsTest, SubdivisionIsBiregularBipartite) {
  for (int d = 2; d <= 4; ++d) {
    for (int n = 2 * d; n <= 14; ++n) {
      if (n * d % 2 != 0) continue;
      const Graph g = RandomRegular(n, d, 17 * n + d);
      const Graph s = Subdivide(g);
      EXPECT_EQ(s.order(), n + n * d / 2);
      for (int v = 0; v < s.order(); ++v) {
        EXPECT_EQ(s.degree(v), v < n ? d : 2);
        for (int u : s.neighbors(v)) EXPECT_NE(u < n, v < n);
      }
    }
  }
}

TEST(GeneratorsTest, RandomRegularRejectionBudget) {
  try {
    RandomRegular(12, 11, 1);
    ADD_FAILURE() << "expected the pairing model to give up";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSearchExhausted);
  }
}

TEST(GeneratorsTest, PaleyTournament) {
  const DirectedGraph d = PaleyTournament();
  EXPECT_EQ(d.out_neighbors(0), (std::vector<int>{1, 2, 4}));
  for (int v = 0; v < 7; ++v) {
    EXPECT_EQ(d.out_degree(v), 3);
    EXPECT_EQ(d.in_degree(v), 3);
  }
  EXPECT_EQ(d.Underlying(), Complete(7));
  std::vector<std::vector<int>> maps(3, std::vector<int>(7));
  for (int x = 0; x < 7; ++x) {
    maps[0][x] = (x + 1) % 7;
    maps[1][x] = (x + 2) % 7;
    maps[2][x] = (x + 4) % 7;
  }
  EXPECT_EQ(FunctionGraph(maps).arcs(), d.arcs());
}

TEST(GeneratorsTest, FunctionGraphs) {
  EXPECT_EQ(FunctionGraph({{0, 1, 2, 3}}).num_arcs(), 0);
  std::vector<int> shift(9);
  for (int x = 0; x < 9; ++x) shift[x] = (x + 1) % 9;
  EXPECT_EQ(FunctionGraph({shift}).Underlying(), Cycle(9));
}

TEST(GeneratorsTest, FunctionGraphDegreeSplitsIntoOutAndIn) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.Int(2, 30);
    const int k = rng.Int(1, 3);
    std::vector<std::vector<int>> maps(k, std::vector<int>(n));
    bool injective_maps = rng.Bernoulli(0.5);
    for (auto& f : maps) {
      if (injective_maps) {
        for (int x = 0; x < n; ++x) f[x] = x;
        rng.Shuffle(f);
      } else {
        for (int& y : f) y = static_cast<int>(rng.Below(n));
      }
    }
    const DirectedGraph d = FunctionGraph(maps);
    const Graph g = d.Underlying();
    int max_in = 0;
    for (int v = 0; v < n; ++v) {
      EXPECT_LE(d.out_degree(v), k);
      EXPECT_LE(g.degree(v), d.out_degree(v) + d.in_degree(v));
      max_in = std::max(max_in, d.in_degree(v));
    }
    // Permutations have in-degree at most k, hence degree at most 2k.
    if (injective_maps) EXPECT_LE(g.max_degree(), 2 * k);
    EXPECT_LE(g.max_degree(), k + max_in);
  }
}

TEST(GeneratorsTest, RandomRegular) {
  const Graph g = RandomRegular(10, 3, 4);
  EXPECT_TRUE(g.is_regular());
  EXPECT_EQ(g.max_degree(), 3);
  EXPECT_EQ(g.num_edges(), 15);
  EXPECT_EQ(RandomRegular(40, 5, 11), RandomRegular(40, 5, 11));
  EXPECT_NE(RandomRegular(40, 5, 11), RandomRegular(40, 5, 12));
  EXPECT_THROW(RandomRegular(9, 3, 1), Error);
  EXPECT_THROW(RandomRegular(4, 4, 1), Error);
}

TEST(GeneratorsTest, RandomRegularHundredIsAnExpander) {
  for (uint64_t seed : {1, 2, 3}) {
    const Graph g = RandomRegular(100, 3, seed);
    ASSERT_TRUE(IsConnected(g)) << seed;
    EXPECT_GT(SpectralGap(g), 0.0);
  }
}

TEST(GeneratorsTest, RandomGnpDeterminism) {
  EXPECT_EQ(RandomGnp(25, 0.3, 8), RandomGnp(25, 0.3, 8));
  EXPECT_EQ(RandomGnp(6, 1.0, 1), Complete(6));
  EXPECT_EQ(RandomGnp(6, 0.0, 1).num_edges(), 0);
  EXPECT_THROW(RandomGnp(5, 1.5, 1), Error);
}

TEST(GeneratorsTest, Families) {
  const GraphFamily cycles = CycleFamily(10);
  EXPECT_EQ(cycles.index_set.front(), 3);
  EXPECT_EQ(cycles.index_set.back(), 10);
  EXPECT_EQ(cycles.degree_bound, 2);
  EXPECT_EQ(cycles.generator(6), Cycle(6));
  const GraphFamily k4 = ConstantFamily("k4", Complete(4), 5);
  EXPECT_EQ(k4.index_set.size(), 5u);
  EXPECT_EQ(k4.generator(3), Complete(4));
  const GraphFamily rr = RandomRegularFamily(3, 100, {20, 30});
  EXPECT_EQ(rr.generator(20), RandomRegular(20, 3, 120));
  EXPECT_EQ(rr.degree_bound, 3);
}

}  // namespace
}  // namespace pmp
