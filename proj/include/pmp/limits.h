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

#ifndef PMP_LIMITS_H_
#define PMP_LIMITS_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pmp/generators.h"
#include "pmp/spectral.h"

namespace pmp {

// Union of the adjacency spectra of a family's members up to some index.
struct SpectrumAccumulation {
  // Sorted; values within the spectral tolerance are merged, keeping the
  // smaller one.
  std::vector<double> points;
  std::map<int, Spectrum> per_index;
};

// Members with index <= max_index. Throws kInvalidArgument when no index of
// the family is <= max_index.
SpectrumAccumulation AccumulateSpectra(const GraphFamily& family,
                                       int max_index,
                                       double tol = kSpectralTol);

// Largest distance between consecutive accumulation points inside
// [lo, hi], with lo and hi themselves as anchors. Throws kInvalidArgument
// when no point lies in the interval or lo > hi.
double MaxGap(const SpectrumAccumulation& acc, double lo, double hi);

// inf over the spectrum of |x - lambda|^2.
double Delta(const Spectrum& s, double x);

// The same quantity via ||S|| - ||S - ||S|| I|| for S = (T - x)(T - x)^*,
// with both norms evaluated on the spectrum of S.
double DeltaOperatorForm(const Spectrum& s, double x);

struct GapEntry {
  int index = 0;
  std::optional<double> gap;
  std::optional<std::string> error;
};

struct GapPersistence {
  std::vector<GapEntry> entries;
  std::optional<double> min_gap;
  std::optional<double> max_gap;
  // "nonincreasing", "nondecreasing", "constant" or "mixed".
  std::string trend;
};

// Spectral gap of every member with index <= max_index; members violating
// the gap preconditions are recorded per index.
GapPersistence ComputeGapPersistence(const GraphFamily& family,
                                     int max_index);

}  // namespace pmp

#endif  // PMP_LIMITS_H_
