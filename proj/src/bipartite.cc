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

#include <cmath>
#include <deque>
#include <string>

#include "pmp/error.h"

namespace pmp {
namespace {

constexpr double kSignThreshold = 1e-9;
constexpr int kMaxDenominator = 1000;

}  // namespace

bool IsSymmetricSpectrum(const Spectrum& s) {
  return s.ApproxEquals(s.Negated());
}

BipartiteVerdict SpectralBipartiteTest(const Graph& g, double tol) {
  if (g.order() == 0 || !IsConnected(g)) {
    Fail(ErrorCode::kPreconditionFailed,
         "spectral bipartiteness test needs a connected graph");
  }
  BipartiteVerdict verdict;
  const int n = g.order();
  verdict.defect = VertexSubset(n);
  verdict.regular = g.is_regular();
  const Eigenpairs pairs = AdjacencyEigenpairs(g);
  const Spectrum s(pairs.values, tol);
  verdict.symmetric_spectrum = IsSymmetricSpectrum(s);
  if (verdict.regular) {
    verdict.minus_d_in_spectrum = s.Contains(-static_cast<double>(g.max_degree()));
  } else {
    verdict.used_spectral_max = true;
    verdict.minus_d_in_spectrum = s.Contains(-s.max());
    return verdict;
  }
  if (!verdict.minus_d_in_spectrum) return verdict;

  // The smallest eigenvalue is -d; its eigenvector is +-c on the two sides.
  std::vector<double> f = pairs.vectors.front();
  double anchor = 0.0;
  for (double x : f) {
    if (std::abs(x) >= kSignThreshold) {
      anchor = x;
      break;
    }
  }
  Bipartition parts{VertexSubset(n), VertexSubset(n)};
  for (int v = 0; v < n; ++v) {
    if (std::abs(f[v]) < kSignThreshold) {
      verdict.defect.insert(v);
    } else if ((f[v] > 0) == (anchor > 0)) {
      parts.a.insert(v);
    } else {
      parts.b.insert(v);
    }
  }
  if (verdict.defect.empty()) verdict.bipartition = std::move(parts);
  return verdict;
}

std::optional<Bipartition> BfsBipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::deque<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          queue.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts{VertexSubset(n), VertexSubset(n)};
  for (int v = 0; v < n; ++v) (side[v] == 0 ? parts.a : parts.b).insert(v);
  return parts;
}

RotationColoring RotationTwoColoring(double alpha, double gamma, int samples) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    Fail(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  }
  if (!(gamma > 0.0 && gamma < std::min(alpha, 1.0 - alpha))) {
    Fail(ErrorCode::kInvalidArgument,
         "gamma must satisfy 0 < gamma < min(alpha, 1 - alpha)");
  }
  if (samples < 1) Fail(ErrorCode::kInvalidArgument, "need at least one sample");
  for (int q = 1; q <= kMaxDenominator; ++q) {
    double qa = q * alpha;
    if (std::abs(qa - std::round(qa)) < 1e-9) {
      Fail(ErrorCode::kInvalidArgument,
           "alpha is numerically rational with denominator " +
               std::to_string(q));
    }
  }
  const int max_hit = static_cast<int>(std::ceil(10.0 / gamma));
  // Orbit points are indexed by k, so x_{k+1} is exactly the rotation of x_k
  // and hitting times of neighbors differ by exactly one.
  auto point = [alpha](long long k) {
    long double x = static_cast<long double>(k) * alpha;
    return static_cast<double>(x - std::floor(x));
  };
  RotationColoring out;
  out.labels.resize(samples);
  out.hit_times.resize(samples);
  for (int k = 0; k < samples; ++k) {
    int j = 0;
    while (!(point(k + j) < gamma)) {
      if (++j > max_hit) {
        Fail(ErrorCode::kSearchExhausted,
             "hitting time above " + std::to_string(max_hit) +
                 "; alpha behaves like a rational");
      }
    }
    out.hit_times[k] = j;
    out.labels[k] = j % 2;
    if (j == 0) ++out.defect_count;
  }
  for (int k = 0; k + 1 < samples; ++k) {
    if (out.hit_times[k] != 0 && out.labels[k] == out.labels[k + 1]) {
      ++out.violations;
    }
  }
  return out;
}

}  // namespace pmp
