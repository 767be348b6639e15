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

#include "pmp/verify.h"

#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "pmp/bipartite.h"
#include "pmp/coloring.h"
#include "pmp/error.h"
#include "pmp/generators.h"
#include "pmp/graph.h"
#include "pmp/limits.h"
#include "pmp/matching.h"
#include "pmp/random.h"
#include "pmp/spectral.h"

namespace pmp {
namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void Expect(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      detail = what;
    }
  }
};

std::vector<Graph> Fixtures() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n) out.push_back(Complete(n));
  for (int n = 3; n <= 10; ++n) out.push_back(Cycle(n));
  for (int n = 2; n <= 6; ++n) out.push_back(Path(n));
  for (int a = 1; a <= 4; ++a) {
    for (int b = a; b <= 4; ++b) out.push_back(CompleteBipartite(a, b));
  }
  out.push_back(Petersen());
  out.push_back(Subdivide(Complete(4)));
  out.push_back(RandomRegular(10, 3, 1));
  out.push_back(RandomRegular(12, 4, 2));
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 4 + static_cast<int>(seed % 7);
    Graph g = RandomGnp(n, 0.25 + 0.01 * static_cast<double>(seed % 40), seed);
    if (IsConnected(g)) out.push_back(std::move(g));
  }
  return out;
}

std::string Describe(const Graph& g) {
  return "graph with n = " + std::to_string(g.order()) + ", m = " +
         std::to_string(g.num_edges());
}

}  // namespace

std::vector<CheckResult> RunVerificationSuite() {
  const std::vector<Graph> fixtures = Fixtures();
  std::vector<std::pair<std::string, std::function<Outcome()>>> checks;

  checks.emplace_back("cycle_spectra", [] {
    Outcome o;
    for (int n = 3; n <= 32; ++n) {
      std::vector<double> expected;
      for (int i = 0; i < n; ++i) {
        expected.push_back(2.0 * std::cos(2.0 * std::numbers::pi * i / n));
      }
      o.Expect(AdjacencySpectrum(Cycle(n)).ApproxEquals(Spectrum(expected)),
               "cycle " + std::to_string(n));
    }
    return o;
  });

  checks.emplace_back("paley_tournament", [] {
    Outcome o;
    const DirectedGraph d = PaleyTournament();
    const Graph g = d.Underlying();
    const Coloring c = FunctionGraphColor(d);
    o.Expect(IsProper(g, c) && c.palette_size <= 7, "coloring");
    o.Expect(BruteForceChromatic(g) == 7, "chromatic number");
    return o;
  });

  checks.emplace_back("wilf_hoffman_sandwich", [&fixtures] {
    Outcome o;
    for (const Graph& g : fixtures) {
      if (g.num_edges() == 0 || g.order() > kMaxChromaticOrder) continue;
      const SpectralBounds b = ComputeBounds(g);
      const int chi = BruteForceChromatic(g);
      o.Expect(*b.hoffman <= chi && chi <= b.wilf, Describe(g));
      const Coloring c = WilfColor(g);
      o.Expect(IsProper(g, c) && c.palette_size <= b.wilf, Describe(g));
      o.Expect(b.m <= b.avg_deg + kSpectralTol &&
                   b.avg_deg <= b.M + kSpectralTol,
               "average degree bounds, " + Describe(g));
      o.Expect(std::sqrt(b.max_deg) <= b.M + kSpectralTol &&
                   b.M <= b.max_deg + kSpectralTol,
               "sqrt(d) <= M <= d, " + Describe(g));
      o.Expect(b.m < 0, "m < 0, " + Describe(g));
    }
    return o;
  });

  checks.emplace_back("biregular_spectra", [] {
    Outcome o;
    for (int a = 1; a <= 6; ++a) {
      for (int b = a; b <= 6; ++b) {
        o.Expect(ApproxEqual(AdjacencySpectrum(CompleteBipartite(a, b)).max(),
                             std::sqrt(a * b)),
                 "K_" + std::to_string(a) + "," + std::to_string(b));
      }
    }
    for (const Graph& g : {Cycle(4), Complete(4), Petersen()}) {
      o.Expect(ApproxEqual(AdjacencySpectrum(Subdivide(g)).max(),
                           std::sqrt(2.0 * g.max_degree())),
               "subdivision of " + Describe(g));
    }
    return o;
  });

  checks.emplace_back("bipartite_equivalence", [&fixtures] {
    Outcome o;
    for (const Graph& g : fixtures) {
      const BipartiteVerdict v = SpectralBipartiteTest(g);
      const bool bfs = BfsBipartition(g).has_value();
      o.Expect(v.symmetric_spectrum == bfs, Describe(g));
      o.Expect(v.minus_d_in_spectrum == bfs, Describe(g));
      if (v.bipartition) {
        o.Expect(Neighborhood(g, v.bipartition->a).IsSubsetOf(v.bipartition->b),
                 "extracted side not independent, " + Describe(g));
      }
    }
    return o;
  });

  checks.emplace_back("regular_laplacian_duality", [&fixtures] {
    Outcome o;
    for (const Graph& g : fixtures) {
      if (!g.is_regular()) continue;
      const double d = g.max_degree();
      std::vector<double> shifted;
      const Spectrum adj = AdjacencySpectrum(g);
      for (double x : adj.values()) shifted.push_back(d - x);
      o.Expect(LaplacianSpectrum(g).ApproxEquals(Spectrum(shifted)),
               Describe(g));
    }
    return o;
  });

  checks.emplace_back("antidiagonal_spectrum", [&fixtures] {
    Outcome o;
    for (const Graph& g : fixtures) {
      const Spectrum s = AdjacencySpectrum(g);
      o.Expect(AntidiagonalSpectrum(g).ApproxEquals(s.Union(s.Negated())),
               Describe(g));
    }
    return o;
  });

  checks.emplace_back("block_inequality", [] {
    Outcome o;
    Rng rng(7);
    for (int trial = 0; trial < 40; ++trial) {
      const int n = rng.Int(2, 20);
      const Graph g = RandomGnp(n, 0.3, 100 + trial);
      const int k = rng.Int(1, 5);
      std::vector<VertexSubset> parts(k, VertexSubset(n));
      for (int v = 0; v < n; ++v) parts[rng.Below(k)].insert(v);
      const BlockReport r = BlockExtremes(g, parts);
      o.Expect(r.holds && r.parts_within_whole, Describe(g));
    }
    return o;
  });

  checks.emplace_back("tutte_and_matching", [&fixtures] {
    Outcome o;
    for (const Graph& g : fixtures) {
      if (g.order() % 2 != 0 || g.order() > 12) continue;
      TutteOptions opts;
      const TutteReport r = TutteScan(g, opts);
      o.Expect(r.classical_holds == r.matching.has_value(), Describe(g));
      if (r.matching) o.Expect(IsPerfectMatching(g, *r.matching), Describe(g));
      if (r.bh_condition && g.is_regular()) {
        o.Expect(r.matching.has_value(), "Brouwer-Haemers, " + Describe(g));
      }
    }
    return o;
  });

  checks.emplace_back("two_set_inequality", [] {
    Outcome o;
    const Graph g = Petersen();
    const TwoSetResult r = TwoSetInequality(
        g, VertexSubset::FromMembers(10, {0}), VertexSubset::FromMembers(10, {2}));
    o.Expect(ApproxEqual(r.lhs, 1.0 / 81) && ApproxEqual(r.rhs, 9.0 / 49) &&
                 r.holds,
             "Petersen hand values");
    return o;
  });

  checks.emplace_back("mass_transport", [] {
    Outcome o;
    Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
      const Graph g = RandomGnp(rng.Int(2, 25), 0.3, 500 + trial);
      Transport phi;
      for (const Edge& e : g.edges()) {
        phi.Set(e.u, e.v, rng.Uniform());
        phi.Set(e.v, e.u, rng.Uniform());
      }
      o.Expect(VerifyMassTransport(g, phi).residual <= 1e-12, Describe(g));
    }
    return o;
  });

  checks.emplace_back("neighborhood_bound", [&fixtures] {
    Outcome o;
    Rng rng(13);
    for (const Graph& g : fixtures) {
      VertexSubset a(g.order());
      for (int v = 0; v < g.order(); ++v) {
        if (rng.Bernoulli(0.3)) a.insert(v);
      }
      o.Expect(Neighborhood(g, a).count() <= g.max_degree() * a.count(),
               Describe(g));
      o.Expect((a == BallOfRadiusOne(g, a)) == IsUnionOfComponents(g, a),
               "invariance, " + Describe(g));
    }
    return o;
  });

  checks.emplace_back("independence_bounds", [&fixtures] {
    Outcome o;
    for (const Graph& g : fixtures) {
      if (g.order() > kMaxIndependenceOrder || g.num_edges() == 0) continue;
      const SpectralBounds b = ComputeBounds(g);
      const double ratio =
          static_cast<double>(BruteForceIndependence(g)) / g.order();
      o.Expect(ratio <= b.mindeg_independence_bound + kSpectralTol,
               Describe(g));
      if (b.independence_bound) {
        o.Expect(ratio <= *b.independence_bound + kSpectralTol, Describe(g));
      }
    }
    return o;
  });

  checks.emplace_back("rotation_demo", [] {
    Outcome o;
    const RotationColoring r =
        RotationTwoColoring((std::sqrt(5.0) - 1.0) / 2.0, 0.05, 1000);
    o.Expect(r.defect_count <= 51 && r.violations == 0,
             "defect " + std::to_string(r.defect_count));
    return o;
  });

  checks.emplace_back("limit_spectrum", [] {
    Outcome o;
    const GraphFamily cycles = CycleFamily(256);
    const double coarse = MaxGap(AccumulateSpectra(cycles, 64), -2, 2);
    const double fine = MaxGap(AccumulateSpectra(cycles, 256), -2, 2);
    o.Expect(fine <= coarse, "max gap not monotone");
    o.Expect(fine < 0.05, "max gap " + std::to_string(fine));
    const GapPersistence gaps = ComputeGapPersistence(cycles, 64);
    o.Expect(gaps.trend == "nonincreasing", "cycle gaps trend " + gaps.trend);
    return o;
  });

  checks.emplace_back("function_graph_coloring", [] {
    Outcome o;
    Rng rng(17);
    for (int trial = 0; trial < 50; ++trial) {
      const int n = rng.Int(1, 50);
      const int k = rng.Int(1, 3);
      std::vector<std::vector<int>> maps(k, std::vector<int>(n));
      for (auto& f : maps) {
        for (int x = 0; x < n; ++x) f[x] = static_cast<int>(rng.Below(n));
      }
      const DirectedGraph d = FunctionGraph(maps);
      const Coloring c = FunctionGraphColor(d);
      o.Expect(IsProper(d.Underlying(), c) && c.palette_size <= 2 * k + 1,
               "function system " + std::to_string(trial));
    }
    return o;
  });

  std::vector<CheckResult> results;
  for (auto& [name, run] : checks) {
    CheckResult result;
    result.name = name;
    try {
      Outcome o = run();
      result.passed = o.passed;
      result.detail = o.detail;
    } catch (const Error& e) {
      result.passed = false;
      result.detail = std::string(ErrorCodeName(e.code())) + ": " + e.what();
    }
    results.push_back(std::move(result));
  }
  return results;
}

}  // namespace pmp
