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

#include "pmp/coloring.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <string>

#include "pmp/error.h"
#include "pmp/spectral.h"

namespace pmp {
namespace {

std::string ListVertices(const VertexSubset& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s.members()) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// Repeatedly removes every residual vertex whose `key` (evaluated against
// the current residual set) is at most `threshold`.
Peeling Peel(const Graph& g, int threshold,
             const std::function<int(int, const std::vector<char>&)>& key,
             const char* what) {
  const int n = g.order();
  Peeling p;
  p.residual = VertexSubset::Full(n);
  p.peel_degree.assign(n, -1);
  p.uncovered.push_back(n);
  std::vector<char> alive(n, 1);
  int remaining = n;
  while (remaining > 0) {
    VertexSubset layer(n);
    for (int v = 0; v < n; ++v) {
      if (alive[v] && key(v, alive) <= threshold) layer.insert(v);
    }
    if (layer.empty()) {
      Fail(ErrorCode::kPreconditionFailed,
           std::string("peeling stuck: every vertex of residual set ") +
               ListVertices(p.residual) + " has " + what + " > " +
               std::to_string(threshold));
    }
    for (int v : layer.members()) {
      int deg = 0;
      for (int u : g.neighbors(v)) deg += alive[u];
      p.peel_degree[v] = deg;
    }
    for (int v : layer.members()) alive[v] = 0;
    remaining -= layer.count();
    p.residual -= layer;
    p.layers.push_back(std::move(layer));
    p.uncovered.push_back(remaining);
  }
  return p;
}

}  // namespace

Coloring MakeColoring(std::vector<std::optional<int>> colors) {
  Coloring c;
  const int n = static_cast<int>(colors.size());
  c.colored_set = VertexSubset(n);
  std::set<int> used;
  for (int v = 0; v < n; ++v) {
    if (colors[v].has_value()) {
      c.colored_set.insert(v);
      used.insert(*colors[v]);
    }
  }
  c.palette_size = static_cast<int>(used.size());
  c.colors = std::move(colors);
  return c;
}

bool IsProper(const Graph& g, const Coloring& c) {
  if (static_cast<int>(c.colors.size()) != g.order()) return false;
  for (const Edge& e : g.edges()) {
    if (c.colors[e.u].has_value() && c.colors[e.v].has_value() &&
        *c.colors[e.u] == *c.colors[e.v]) {
      return false;
    }
  }
  return true;
}

Coloring GreedyListColoring(const Graph& g, const ListAssignment& lists) {
  const int n = g.order();
  if (static_cast<int>(lists.size()) != n) {
    Fail(ErrorCode::kInvalidArgument, "list assignment size differs from n");
  }
  for (int v = 0; v < n; ++v) {
    std::set<int> distinct(lists[v].begin(), lists[v].end());
    if (g.degree(v) >= static_cast<int>(distinct.size())) {
      Fail(ErrorCode::kPreconditionFailed,
           "vertex " + std::to_string(v) + " has degree " +
               std::to_string(g.degree(v)) + " but only " +
               std::to_string(distinct.size()) + " allowed colors");
    }
  }
  std::vector<std::optional<int>> colors(n);
  for (int v = 0; v < n; ++v) {
    std::set<int> taken;
    for (int u : g.neighbors(v)) {
      if (colors[u].has_value()) taken.insert(*colors[u]);
    }
    std::set<int> allowed(lists[v].begin(), lists[v].end());
    for (int c : allowed) {
      if (!taken.count(c)) {
        colors[v] = c;
        break;
      }
    }
  }
  return MakeColoring(std::move(colors));
}

Peeling PeelByThreshold(const Graph& g, int t) {
  return Peel(
      g, t,
      [&g](int v, const std::vector<char>& alive) {
        int deg = 0;
        for (int u : g.neighbors(v)) deg += alive[u];
        return deg;
      },
      "degree");
}

Peeling PeelByInDegree(const DirectedGraph& d, int k) {
  const Graph g = d.Underlying();
  std::vector<std::vector<int>> in(d.order());
  for (int x = 0; x < d.order(); ++x) {
    for (int y : d.out_neighbors(x)) in[y].push_back(x);
  }
  return Peel(
      g, k,
      [&in](int v, const std::vector<char>& alive) {
        int deg = 0;
        for (int u : in[v]) deg += alive[u];
        return deg;
      },
      "in-degree");
}

DecayReport WilfDecay(const Peeling& p, double spectral_max) {
  DecayReport report;
  const int lambda = FloorSnapped(spectral_max);
  // Any s in (M - lambda, 1) works; take the midpoint.
  report.s = std::clamp((spectral_max - lambda + 1.0) / 2.0, 0.0, 1.0);
  report.r = (lambda + report.s) / (lambda + 1.0);
  for (size_t k = 0; k + 1 < p.uncovered.size(); ++k) {
    if (p.uncovered[k] == 0) break;
    double ratio = static_cast<double>(p.uncovered[k + 1]) / p.uncovered[k];
    report.worst_ratio = std::max(report.worst_ratio, ratio);
    if (ratio > report.r + kSpectralTol) report.holds = false;
  }
  return report;
}

Coloring BackwardsListColor(const Graph& g, const Peeling& p, int palette) {
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    if (p.peel_degree[v] >= palette) {
      Fail(ErrorCode::kPreconditionFailed,
           "palette " + std::to_string(palette) + " too small: vertex " +
               std::to_string(v) + " had residual degree " +
               std::to_string(p.peel_degree[v]) + " when peeled");
    }
  }
  std::vector<std::optional<int>> colors(n);
  std::vector<char> taken(palette);
  for (auto layer = p.layers.rbegin(); layer != p.layers.rend(); ++layer) {
    for (int v : layer->members()) {
      std::fill(taken.begin(), taken.end(), 0);
      for (int u : g.neighbors(v)) {
        if (colors[u].has_value()) taken[*colors[u]] = 1;
      }
      auto free = std::find(taken.begin(), taken.end(), 0);
      if (free == taken.end()) {
        Fail(ErrorCode::kPreconditionFailed,
             "backward list of vertex " + std::to_string(v) + " is empty");
      }
      colors[v] = static_cast<int>(free - taken.begin());
    }
  }
  return MakeColoring(std::move(colors));
}

Coloring WilfColor(const Graph& g) {
  if (g.order() == 0) return MakeColoring({});
  const int lambda = FloorSnapped(AdjacencySpectrum(g).max());
  return BackwardsListColor(g, PeelByThreshold(g, lambda), lambda + 1);
}

Coloring FunctionGraphColor(const DirectedGraph& d) {
  const int k = d.num_generators();
  if (d.max_out_degree() > k) {
    Fail(ErrorCode::kPreconditionFailed,
         "out-degree exceeds the number of generating maps");
  }
  const Graph g = d.Underlying();
  return BackwardsListColor(g, PeelByInDegree(d, k), 2 * k + 1);
}

Coloring MinDegreePeelColor(const Graph& g, double bound) {
  if (bound < 0) {
    Fail(ErrorCode::kInvalidArgument, "degree bound must be nonnegative");
  }
  const int t = FloorSnapped(bound);
  return BackwardsListColor(g, PeelByThreshold(g, t), t + 1);
}

int BruteForceChromatic(const Graph& g) {
  const int n = g.order();
  if (n > kMaxChromaticOrder) {
    Fail(ErrorCode::kCapExceeded, "brute-force chromatic number limited to n <= " +
                                      std::to_string(kMaxChromaticOrder));
  }
  if (n == 0) return 0;
  std::vector<uint32_t> closed(n);
  for (int v = 0; v < n; ++v) {
    closed[v] = uint32_t{1} << v;
    for (int u : g.neighbors(v)) closed[v] |= uint32_t{1} << u;
  }
  const uint32_t full = (uint32_t{1} << n) - 1;
  std::vector<char> independent(full + 1, 0);
  independent[0] = 1;
  for (uint32_t s = 1; s <= full; ++s) {
    int v = std::countr_zero(s);
    uint32_t rest = s & (s - 1);
    independent[s] = independent[rest] && (closed[v] & rest) == 0;
  }
  std::vector<uint8_t> chi(full + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    const int v = std::countr_zero(s);
    const uint32_t bit = uint32_t{1} << v;
    // Color class containing v: v plus an independent subset of S \ N[v].
    const uint32_t pool = s & ~closed[v];
    uint8_t best = 0xff;
    for (uint32_t t = pool;; t = (t - 1) & pool) {
      if (independent[t]) {
        best = std::min<uint8_t>(best, chi[s & ~(t | bit)] + 1);
      }
      if (t == 0) break;
    }
    chi[s] = best;
  }
  return chi[full];
}

VertexSubset MaximumIndependentSet(const Graph& g) {
  const int n = g.order();
  if (n > kMaxIndependenceOrder) {
    Fail(ErrorCode::kCapExceeded, "brute-force independence limited to n <= " +
                                      std::to_string(kMaxIndependenceOrder));
  }
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int u : g.neighbors(v)) nbr[v] |= uint32_t{1} << u;
  }
  uint32_t best_set = 0;
  int best = -1;
  std::function<void(uint32_t, uint32_t, int)> search =
      [&](uint32_t cand, uint32_t chosen, int size) {
        if (size + std::popcount(cand) <= best) return;
        if (cand == 0) {
          best = size;
          best_set = chosen;
          return;
        }
        int pivot = -1;
        int pivot_deg = -1;
        for (uint32_t c = cand; c != 0; c &= c - 1) {
          int v = std::countr_zero(c);
          int deg = std::popcount(nbr[v] & cand);
          if (deg > pivot_deg) {
            pivot = v;
            pivot_deg = deg;
          }
        }
        if (pivot_deg == 0) {
          search(0, chosen | cand, size + std::popcount(cand));
          return;
        }
        const uint32_t bit = uint32_t{1} << pivot;
        search(cand & ~bit & ~nbr[pivot], chosen | bit, size + 1);
        search(cand & ~bit, chosen, size);
      };
  const uint32_t all = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  search(all, 0, 0);
  return VertexSubset::FromMask(n, best_set);
}

int BruteForceIndependence(const Graph& g) {
  return MaximumIndependentSet(g).count();
}

}  // namespace pmp
