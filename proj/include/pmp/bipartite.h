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

#ifndef PMP_BIPARTITE_H_
#define PMP_BIPARTITE_H_

#include <optional>
#include <utility>
#include <vector>

#include "pmp/graph.h"
#include "pmp/spectral.h"
#include "pmp/vertex_subset.h"

namespace pmp {

struct Bipartition {
  VertexSubset a;  // contains vertex 0
  VertexSubset b;
};

// True when the spectrum equals its negation as a multiset.
bool IsSymmetricSpectrum(const Spectrum& s);

struct BipartiteVerdict {
  bool symmetric_spectrum = false;
  // -d in sigma(T) for regular graphs; -M(T) in sigma(T) otherwise.
  bool minus_d_in_spectrum = false;
  bool regular = false;
  // Set when the -d test was replaced by -M (non-regular input); extraction
  // is skipped in that case.
  bool used_spectral_max = false;
  std::optional<Bipartition> bipartition;
  // Vertices whose eigenvector entry is numerically zero.
  VertexSubset defect;
};

// Spectral bipartiteness indicators for a connected graph, with the
// bipartition read off the sign pattern of a -d eigenvector when the graph
// is regular. Throws kPreconditionFailed on disconnected input.
BipartiteVerdict SpectralBipartiteTest(const Graph& g,
                                       double tol = kSpectralTol);

// Classical breadth-first 2-coloring; nullopt iff there is an odd cycle.
std::optional<Bipartition> BfsBipartition(const Graph& g);

struct RotationColoring {
  std::vector<int> labels;   // parity of the first hitting time of [0, gamma)
  std::vector<int> hit_times;
  int defect_count = 0;      // samples inside [0, gamma)
  int violations = 0;        // k with x_k outside [0, gamma) and
                             // labels[k] == labels[k + 1]
};

// Approximate 2-coloring of the irrational rotation x -> x + alpha (mod 1)
// sampled along the orbit x_k = k * alpha mod 1, k < samples. Throws
// kInvalidArgument unless 0 < gamma < min(alpha, 1 - alpha) and alpha has no
// rational approximation p/q, q <= 1000, closer than 1e-9 / q; throws
// kSearchExhausted when a hitting time exceeds ceil(10 / gamma).
RotationColoring RotationTwoColoring(double alpha, double gamma, int samples);

}  // namespace pmp

#endif  // PMP_BIPARTITE_H_
