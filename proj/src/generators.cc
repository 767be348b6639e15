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

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "pmp/error.h"
#include "pmp/random.h"

namespace pmp {
namespace {

void Require(bool ok, const std::string& message) {
  if (!ok) Fail(ErrorCode::kInvalidArgument, message);
}

}  // namespace

Graph Cycle(int n) {
  Require(n >= 3, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  edges.push_back({0, n - 1});
  return Graph::FromEdges(n, edges);
}

Graph Complete(int n) {
  Require(n >= 1, "complete graph needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::FromEdges(n, edges);
}

Graph CompleteBipartite(int a, int b) {
  Require(a >= 1 && b >= 1, "complete bipartite graph needs a, b >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph::FromEdges(a + b, edges);
}

Graph Path(int n) {
  Require(n >= 1, "path needs n >= 1, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::FromEdges(n, edges);
}

Graph Petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  return Graph::FromEdges(10, edges);
}

Graph Subdivide(const Graph& g) {
  Require(g.order() > 0 && g.is_regular() && g.max_degree() >= 1,
          "subdivision needs a d-regular graph with d >= 1");
  const int n = g.order();
  std::vector<Edge> edges;
  int k = 0;
  for (const Edge& e : g.edges()) {
    edges.push_back({e.u, n + k});
    edges.push_back({e.v, n + k});
    ++k;
  }
  return Graph::FromEdges(n + k, edges);
}

DirectedGraph FunctionGraph(std::vector<std::vector<int>> maps) {
  Require(!maps.empty(), "function graph needs at least one map");
  const int n = static_cast<int>(maps.front().size());
  return DirectedGraph::FromFunctions(n, std::move(maps));
}

DirectedGraph PaleyTournament() {
  std::vector<std::vector<int>> maps;
  for (int shift : {1, 2, 4}) {
    std::vector<int> f(7);
    for (int x = 0; x < 7; ++x) f[x] = (x + shift) % 7;
    maps.push_back(std::move(f));
  }
  return FunctionGraph(std::move(maps));
}

Graph RandomRegular(int n, int d, uint64_t seed) {
  Require(n >= 1 && d >= 0, "random regular graph needs n >= 1, d >= 0");
  Require(d < n, "random regular graph needs d < n");
  Require((static_cast<long long>(n) * d) % 2 == 0,
          "random regular graph needs n*d even");
  constexpr int kMaxAttempts = 1000;
  Rng rng(seed);
  std::vector<int> points(static_cast<size_t>(n) * d);
  for (size_t p = 0; p < points.size(); ++p) points[p] = static_cast<int>(p) / d;
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.Shuffle(points);
    seen.clear();
    edges.clear();
    bool ok = true;
    for (size_t p = 0; p < points.size(); p += 2) {
      int u = std::min(points[p], points[p + 1]);
      int v = std::max(points[p], points[p + 1]);
      if (u == v || !seen.insert({u, v}).second) {
        ok = false;
        break;
      }
      edges.push_back({u, v});
    }
    if (ok) return Graph::FromEdges(n, edges);
  }
  Fail(ErrorCode::kSearchExhausted,
       "pairing model rejected " + std::to_string(kMaxAttempts) +
           " attempts for n = " + std::to_string(n) + ", d = " +
           std::to_string(d));
}

Graph RandomGnp(int n, double p, uint64_t seed) {
  Require(n >= 0 && p >= 0.0 && p <= 1.0, "G(n, p) needs n >= 0, p in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.Bernoulli(p)) edges.push_back({u, v});
    }
  }
  return Graph::FromEdges(n, edges);
}

GraphFamily CycleFamily(int max_n) {
  GraphFamily family;
  family.name = "cycle";
  family.generator = [](int k) { return Cycle(k); };
  for (int k = 3; k <= max_n; ++k) family.index_set.push_back(k);
  family.degree_bound = 2;
  return family;
}

GraphFamily ConstantFamily(std::string name, Graph g, int length) {
  GraphFamily family;
  family.name = std::move(name);
  family.degree_bound = g.max_degree();
  family.generator = [g = std::move(g)](int) { return g; };
  for (int k = 1; k <= length; ++k) family.index_set.push_back(k);
  return family;
}

GraphFamily RandomRegularFamily(int d, uint64_t seed, std::vector<int> sizes) {
  GraphFamily family;
  family.name = "random-regular";
  family.generator = [d, seed](int k) {
    return RandomRegular(k, d, seed + static_cast<uint64_t>(k));
  };
  std::sort(sizes.begin(), sizes.end());
  family.index_set = std::move(sizes);
  family.degree_bound = d;
  return family;
}

}  // namespace pmp
