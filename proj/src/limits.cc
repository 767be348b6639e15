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

#include "pmp/limits.h"

#include <algorithm>
#include <cmath>

#include "pmp/error.h"

namespace pmp {

SpectrumAccumulation AccumulateSpectra(const GraphFamily& family,
                                       int max_index, double tol) {
  SpectrumAccumulation acc;
  std::vector<double> all;
  for (int k : family.index_set) {
    if (k > max_index) break;
    Spectrum s = AdjacencySpectrum(family.generator(k));
    all.insert(all.end(), s.values().begin(), s.values().end());
    acc.per_index.emplace(k, std::move(s));
  }
  if (acc.per_index.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "family '" + family.name + "' has no member with index <= " +
             std::to_string(max_index));
  }
  std::sort(all.begin(), all.end());
  for (double x : all) {
    if (acc.points.empty() || !ApproxEqual(acc.points.back(), x, tol)) {
      acc.points.push_back(x);
    }
  }
  return acc;
}

double MaxGap(const SpectrumAccumulation& acc, double lo, double hi) {
  if (lo > hi) Fail(ErrorCode::kInvalidArgument, "interval has lo > hi");
  std::vector<double> inside;
  for (double x : acc.points) {
    // Points agreeing with an endpoint within tolerance count as inside.
    if ((x >= lo || ApproxEqual(x, lo)) && (x <= hi || ApproxEqual(x, hi))) {
      inside.push_back(std::clamp(x, lo, hi));
    }
  }
  if (inside.empty()) {
    Fail(ErrorCode::kInvalidArgument, "no accumulation point in interval");
  }
  double gap = inside.front() - lo;
  for (size_t i = 1; i < inside.size(); ++i) {
    gap = std::max(gap, inside[i] - inside[i - 1]);
  }
  return std::max(gap, hi - inside.back());
}

double Delta(const Spectrum& s, double x) {
  if (s.empty()) Fail(ErrorCode::kInvalidArgument, "empty spectrum");
  double best = INFINITY;
  for (double lambda : s.values()) {
    best = std::min(best, (x - lambda) * (x - lambda));
  }
  return best;
}

double DeltaOperatorForm(const Spectrum& s, double x) {
  if (s.empty()) Fail(ErrorCode::kInvalidArgument, "empty spectrum");
  // sigma(S) = {(lambda - x)^2}; S is positive, so ||S|| is its largest
  // value and ||S - ||S|| I|| = max |mu - ||S|||.
  double norm = 0.0;
  for (double lambda : s.values()) {
    norm = std::max(norm, (lambda - x) * (lambda - x));
  }
  double shifted = 0.0;
  for (double lambda : s.values()) {
    shifted = std::max(shifted, std::abs((lambda - x) * (lambda - x) - norm));
  }
  return norm - shifted;
}

GapPersistence ComputeGapPersistence(const GraphFamily& family,
                                     int max_index) {
  GapPersistence out;
  for (int k : family.index_set) {
    if (k > max_index) break;
    GapEntry entry;
    entry.index = k;
    try {
      entry.gap = SpectralGap(family.generator(k));
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.entries.push_back(std::move(entry));
  }
  bool up = false;
  bool down = false;
  std::optional<double> prev;
  for (const auto& e : out.entries) {
    if (!e.gap) continue;
    const double g = *e.gap;
    out.min_gap = out.min_gap ? std::min(*out.min_gap, g) : g;
    out.max_gap = out.max_gap ? std::max(*out.max_gap, g) : g;
    if (prev && !ApproxEqual(*prev, g)) (g > *prev ? up : down) = true;
    prev = g;
  }
  if (up && down) {
    out.trend = "mixed";
  } else if (up) {
    out.trend = "nondecreasing";
  } else if (down) {
    out.trend = "nonincreasing";
  } else {
    out.trend = "constant";
  }
  return out;
}

}  // namespace pmp
