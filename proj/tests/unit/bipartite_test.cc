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

#include "pmp/bipartite.h"

#include <gtest/gtest.h>

#include <cmath>

#include "oracles.h"
#include "pmp/error.h"
#include "pmp/generators.h"
#include "pmp/random.h"

namespace pmp {
namespace {

bool Independent(const Graph& g, const VertexSubset& a) {
  return !Neighborhood(g, a).Intersects(a);
}

TEST(SymmetricSpectrumTest, Examples) {
  EXPECT_TRUE(IsSymmetricSpectrum(Spectrum({-2, 0, 2})));
  EXPECT_FALSE(IsSymmetricSpectrum(Spectrum({-1, -1, 2})));
  EXPECT_TRUE(IsSymmetricSpectrum(AdjacencySpectrum(Cycle(6))));
}

TEST(SpectralBipartiteTest, Cycle4) {
  const BipartiteVerdict v = SpectralBipartiteTest(Cycle(4));
  EXPECT_TRUE(v.symmetric_spectrum);
  EXPECT_TRUE(v.minus_d_in_spectrum);
  EXPECT_TRUE(v.regular);
  EXPECT_TRUE(v.defect.empty());
  ASSERT_TRUE(v.bipartition.has_value());
  EXPECT_EQ(v.bipartition->a.members(), (std::vector<int>{0, 2}));
  EXPECT_EQ(v.bipartition->b.members(), (std::vector<int>{1, 3}));
}

TEST(SpectralBipartiteTest, OddCycleAndPetersen) {
  for (const Graph& g : {Complete(3), Petersen(), Cycle(7)}) {
    const BipartiteVerdict v = SpectralBipartiteTest(g);
    EXPECT_FALSE(v.symmetric_spectrum);
    EXPECT_FALSE(v.minus_d_in_spectrum);
    EXPECT_FALSE(v.bipartition.has_value());
  }
}

TEST(SpectralBipartiteTest, NonRegularUsesSpectralMax) {
  const BipartiteVerdict star = SpectralBipartiteTest(CompleteBipartite(1, 4));
  EXPECT_TRUE(star.used_spectral_max);
  EXPECT_TRUE(star.symmetric_spectrum);
  EXPECT_TRUE(star.minus_d_in_spectrum);
  EXPECT_FALSE(star.bipartition.has_value());
  const Graph paw = Graph::FromEdges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  const BipartiteVerdict v = SpectralBipartiteTest(paw);
  EXPECT_FALSE(v.symmetric_spectrum);
  EXPECT_FALSE(v.minus_d_in_spectrum);
}

TEST(SpectralBipartiteTest, RejectsDisconnected) {
  try {
    SpectralBipartiteTest(Graph::FromEdges(4, {{0, 1}, {2, 3}}));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionFailed);
  }
}

TEST(SpectralBipartiteTest, ExtractsSidesOfRegularBipartiteGraphs) {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    // Bipartite double cover of a random regular graph.
    const int n = 2 * rng.Int(3, 10);
    const int d = rng.Int(2, 4);
    if (d >= n) continue;
    const Graph base = RandomRegular(n, d, 80 + trial);
    std::vector<Edge> edges;
    for (const Edge& e : base.edges()) {
      edges.push_back({e.u, n + e.v});
      edges.push_back({e.v, n + e.u});
    }
    const Graph cover = Graph::FromEdges(2 * n, edges);
    ASSERT_TRUE(BfsBipartition(cover).has_value());
    if (!IsConnected(cover)) continue;
    const BipartiteVerdict v = SpectralBipartiteTest(cover);
    ASSERT_TRUE(v.bipartition.has_value());
    EXPECT_TRUE(v.defect.empty());
    EXPECT_TRUE(Independent(cover, v.bipartition->a));
    EXPECT_TRUE(Independent(cover, v.bipartition->b));
    EXPECT_EQ((v.bipartition->a | v.bipartition->b), VertexSubset::Full(2 * n));
    EXPECT_TRUE(v.bipartition->a.contains(0));
  }
}

TEST(BfsBipartitionTest, Examples) {
  const auto c6 = BfsBipartition(Cycle(6));
  ASSERT_TRUE(c6.has_value());
  EXPECT_EQ(c6->a.members(), (std::vector<int>{0, 2, 4}));
  EXPECT_FALSE(BfsBipartition(Cycle(5)).has_value());
  EXPECT_TRUE(BfsBipartition(Graph::FromEdges(3, {})).has_value());
}

TEST(BfsBipartitionTest, AgreesWithExhaustiveOracle) {
  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = RandomGnp(rng.Int(1, 12), 0.25, 1000 + trial);
    EXPECT_EQ(BfsBipartition(g).has_value(), testing::OracleBipartite(g));
  }
}

TEST(RotationTest, GoldenRatioDemo) {
  const RotationColoring r =
      RotationTwoColoring((std::sqrt(5.0) - 1) / 2, 0.05, 1000);
  EXPECT_LE(r.defect_count, 51);
  EXPECT_EQ(r.violations, 0);
  EXPECT_EQ(r.labels.size(), 1000u);
}

TEST(RotationTest, OriginStartsAtParityZero) {
  const RotationColoring r = RotationTwoColoring(std::sqrt(2.0) - 1, 0.1, 20);
  EXPECT_EQ(r.hit_times[0], 0);
  EXPECT_EQ(r.labels[0], 0);
  // Outside the target interval, the next sample hits one step sooner.
  for (int k = 0; k + 1 < 20; ++k) {
    if (r.hit_times[k] > 0) EXPECT_EQ(r.hit_times[k + 1], r.hit_times[k] - 1);
  }
}

TEST(RotationTest, DefectBound) {
  for (double gamma : {0.01, 0.03, 0.1, 0.2}) {
    const RotationColoring r =
        RotationTwoColoring(std::sqrt(3.0) - 1, gamma, 2000);
    EXPECT_LE(r.defect_count, gamma * 2000 + 1);
    EXPECT_EQ(r.violations, 0);
  }
}

TEST(RotationTest, Preconditions) {
  EXPECT_THROW(RotationTwoColoring(0.3, 0.3, 10), Error);
  EXPECT_THROW(RotationTwoColoring(0.5, 0.1, 10), Error);
  EXPECT_THROW(RotationTwoColoring(1.5, 0.1, 10), Error);
  EXPECT_THROW(RotationTwoColoring(0.37, 0.1, 10), Error);
}

}  // namespace
}  // namespace pmp
