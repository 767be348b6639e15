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

#include "pmp/matching.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>
#include <unordered_set>

#include "pmp/error.h"
#include "pmp/random.h"
#include "pmp/spectral.h"

namespace pmp {
namespace {

std::vector<uint32_t> NeighborMasks(const Graph& g) {
  std::vector<uint32_t> masks(g.order(), 0);
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) masks[v] |= uint32_t{1} << u;
  }
  return masks;
}

// Keeps the larger of odd/size ratios; ties keep the earlier candidate.
struct RatioTracker {
  int best_odd = -1;
  int best_size = 1;
  VertexSubset best;

  void Offer(int odd, const VertexSubset& a) {
    const int size = a.count();
    if (best_odd < 0 ||
        static_cast<long long>(odd) * best_size >
            static_cast<long long>(best_odd) * size) {
      best_odd = odd;
      best_size = size;
      best = a;
    }
  }
};

bool BhCondition(const Graph& g) {
  if (g.order() < 2 || !IsConnected(g)) return false;
  Extremes e = MeanZeroExtremes(g);
  return 2.0 * e.m >= e.M - kSpectralTol * std::max(1.0, e.M);
}

}  // namespace

int OddComponentCount(const Graph& g, const VertexSubset& a) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  for (int v : a.members()) seen[v] = 1;
  int odd = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    int size = 0;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++size;
      for (int u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    odd += size & 1;
  }
  return odd;
}

double OddComponentMeasure(const Graph& g, const VertexSubset& a) {
  if (g.order() == 0) return 0.0;
  return static_cast<double>(OddComponentCount(g, a)) / g.order();
}

TutteReport TutteScan(const Graph& g, const TutteOptions& options) {
  const int n = g.order();
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "Tutte scan needs n >= 1");
  TutteReport report;
  report.mode = options.mode;
  RatioTracker tracker;

  if (options.mode == TutteMode::kExhaustive) {
    if (n > kMaxTutteExhaustiveOrder) {
      Fail(ErrorCode::kCapExceeded,
           "exhaustive Tutte scan limited to n <= " +
               std::to_string(kMaxTutteExhaustiveOrder) + ", got " +
               std::to_string(n));
    }
    const std::vector<uint32_t> nbr = NeighborMasks(g);
    const uint32_t full = (uint32_t{1} << n) - 1;
    // Neighborhood of a mask as the union of two half-width lookups.
    const int half = (n + 1) / 2;
    std::vector<uint32_t> low(size_t{1} << half, 0);
    std::vector<uint32_t> high(size_t{1} << (n - half), 0);
    for (uint32_t m = 1; m < low.size(); ++m) {
      low[m] = low[m & (m - 1)] | nbr[std::countr_zero(m)];
    }
    for (uint32_t m = 1; m < high.size(); ++m) {
      high[m] = high[m & (m - 1)] | nbr[half + std::countr_zero(m)];
    }
    const uint32_t low_mask = (uint32_t{1} << half) - 1;
    // odd[S]: odd components of G[S], peeling off the component of the
    // lowest vertex of S.
    std::vector<uint8_t> odd(size_t{full} + 1, 0);
    for (uint32_t s = 1; s <= full; ++s) {
      uint32_t comp = s & (~s + 1);
      for (;;) {
        const uint32_t grown =
            (comp | low[comp & low_mask] | high[comp >> half]) & s;
        if (grown == comp) break;
        comp = grown;
      }
      odd[s] = static_cast<uint8_t>((std::popcount(comp) & 1) + odd[s & ~comp]);
    }
    int best_odd = -1;
    int best_size = 1;
    uint32_t best_mask = 0;
    for (uint32_t a = 1; a <= full; ++a) {
      const int o = odd[full & ~a];
      const int k = std::popcount(a);
      if (best_odd < 0 || o * best_size > best_odd * k) {
        best_odd = o;
        best_size = k;
        best_mask = a;
      }
    }
    tracker.best_odd = best_odd;
    tracker.best_size = best_size;
    tracker.best = VertexSubset::FromMask(n, best_mask);
    report.subsets_scanned = full;
  } else {
    Rng rng(options.seed);
    std::vector<int> by_degree(n);
    for (int v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&g](int a, int b) { return g.degree(a) < g.degree(b); });
    auto offer = [&](const VertexSubset& a) {
      if (a.empty()) return;
      tracker.Offer(OddComponentCount(g, a), a);
      ++report.subsets_scanned;
    };
    for (int v = 0; v < n; ++v) offer(VertexSubset::FromMembers(n, {v}));
    const int low = std::min(n, 16);
    for (int i = 0; i < low; ++i) {
      const int v = by_degree[i];
      offer(Neighborhood(g, VertexSubset::FromMembers(n, {v})));
    }
    for (int i = 0; i < options.samples; ++i) {
      VertexSubset a(n);
      if (rng.Bernoulli(0.5)) {
        // Neighborhood of a low-degree vertex plus a few random vertices.
        const int v = by_degree[rng.Below(low)];
        a = Neighborhood(g, VertexSubset::FromMembers(n, {v}));
      }
      int extra = 1;
      while (extra < n && rng.Bernoulli(0.5)) ++extra;
      for (int j = 0; j < extra; ++j) a.insert(static_cast<int>(rng.Below(n)));
      offer(a);
    }
  }

  report.odd_count = tracker.best_odd;
  report.witness_size = tracker.best_size;
  report.witness = tracker.best;
  report.c_star = static_cast<double>(tracker.best_odd) / tracker.best_size;
  report.classical_holds = tracker.best_odd <= tracker.best_size;
  report.strict_holds = tracker.best_odd < tracker.best_size;
  if (options.with_spectral) report.bh_condition = BhCondition(g);
  if (options.with_matching && n % 2 == 0 && n <= kMaxMatchingOrder) {
    report.matching = PerfectMatchingOracle(g);
  }
  return report;
}

bool BrouwerHaemersTest(const Graph& g) {
  if (g.order() < 2 || !g.is_regular() || !IsConnected(g)) {
    Fail(ErrorCode::kPreconditionFailed,
         "Brouwer-Haemers test needs a connected regular graph");
  }
  return BhCondition(g);
}

TwoSetResult TwoSetInequality(const Graph& g, const VertexSubset& y,
                              const VertexSubset& z) {
  if (g.order() < 2 || !g.is_regular() || !IsConnected(g)) {
    Fail(ErrorCode::kPreconditionFailed,
         "two-set inequality needs a connected regular graph");
  }
  if (y.empty() || z.empty()) {
    Fail(ErrorCode::kPreconditionFailed, "Y and Z must be nonempty");
  }
  if (y.Intersects(z)) {
    Fail(ErrorCode::kPreconditionFailed, "Y and Z must be disjoint");
  }
  for (int u : y.members()) {
    for (int v : g.neighbors(u)) {
      if (z.contains(v)) {
        Fail(ErrorCode::kPreconditionFailed,
             "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                 ") joins Y and Z");
      }
    }
  }
  const Extremes e = MeanZeroExtremes(g);
  const double my = y.measure();
  const double mz = z.measure();
  TwoSetResult result;
  result.lhs = my * mz / ((1.0 - my) * (1.0 - mz));
  const double q = (e.M - e.m) / (e.M + e.m);
  result.rhs = q * q;
  result.holds = result.lhs <= result.rhs + kSpectralTol;
  return result;
}

ExpansionResult IndependentExpansion(const Graph& g) {
  const int n = g.order();
  if (n == 0) Fail(ErrorCode::kInvalidArgument, "expansion needs n >= 1");
  if (n > kMaxExpansionOrder) {
    Fail(ErrorCode::kCapExceeded, "independent expansion limited to n <= " +
                                      std::to_string(kMaxExpansionOrder));
  }
  const std::vector<uint32_t> nbr = NeighborMasks(g);
  int best_n = -1;
  int best_k = 1;
  uint32_t best_mask = 0;
  std::function<void(int, uint32_t, uint32_t, uint32_t)> extend =
      [&](int next, uint32_t set, uint32_t blocked, uint32_t nbhd) {
        for (int v = next; v < n; ++v) {
          const uint32_t bit = uint32_t{1} << v;
          if (blocked & bit) continue;
          const uint32_t s = set | bit;
          const uint32_t nb = nbhd | nbr[v];
          const int k = std::popcount(s);
          const int size = std::popcount(nb);
          const long long lhs = static_cast<long long>(size) * best_k;
          const long long rhs = static_cast<long long>(best_n) * k;
          if (best_n < 0 || lhs < rhs || (lhs == rhs && s < best_mask)) {
            best_n = size;
            best_k = k;
            best_mask = s;
          }
          extend(v + 1, s, blocked | nbr[v] | bit, nb);
        }
      };
  extend(0, 0, 0, 0);
  ExpansionResult result;
  result.neighborhood_size = best_n;
  result.set_size = best_k;
  result.min_ratio = static_cast<double>(best_n) / best_k;
  result.witness = VertexSubset::FromMask(n, best_mask);
  return result;
}

std::optional<std::vector<Edge>> PerfectMatchingOracle(const Graph& g) {
  const int n = g.order();
  if (n > kMaxMatchingOrder) {
    Fail(ErrorCode::kCapExceeded, "matching oracle limited to n <= " +
                                      std::to_string(kMaxMatchingOrder));
  }
  if (n % 2 != 0) return std::nullopt;
  std::unordered_set<uint32_t> dead;
  std::vector<Edge> chosen;
  std::function<bool(uint32_t)> match = [&](uint32_t free) {
    if (free == 0) return true;
    if (dead.count(free)) return false;
    const int v = std::countr_zero(free);
    for (int u : g.neighbors(v)) {
      const uint32_t ubit = uint32_t{1} << u;
      if (!(free & ubit)) continue;
      chosen.push_back({v, u});
      if (match(free & ~ubit & ~(uint32_t{1} << v))) return true;
      chosen.pop_back();
    }
    dead.insert(free);
    return false;
  };
  const uint32_t all = n == 0 ? 0 : (n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1);
  if (!match(all)) return std::nullopt;
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

bool IsPerfectMatching(const Graph& g, const std::vector<Edge>& matching) {
  std::vector<int> hits(g.order(), 0);
  for (const Edge& e : matching) {
    if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() ||
        !g.adjacent(e.u, e.v)) {
      return false;
    }
    ++hits[e.u];
    ++hits[e.v];
  }
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace pmp
