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

#ifndef PMP_COLORING_H_
#define PMP_COLORING_H_

#include <optional>
#include <vector>

#include "pmp/graph.h"
#include "pmp/vertex_subset.h"

namespace pmp {

// Allowed colors per vertex.
using ListAssignment = std::vector<std::vector<int>>;

struct Coloring {
  std::vector<std::optional<int>> colors;
  VertexSubset colored_set;
  int palette_size = 0;  // distinct colors used
};

// Builds a Coloring from per-vertex colors, deriving the colored set and
// palette size.
Coloring MakeColoring(std::vector<std::optional<int>> colors);

// No edge inside the colored set joins two vertices of the same color.
bool IsProper(const Graph& g, const Coloring& c);

// Colors vertices in ascending order with the least color of L(x) not used by
// an already colored neighbor. Throws kPreconditionFailed naming the first
// vertex with deg(x) >= |L(x)|.
Coloring GreedyListColoring(const Graph& g, const ListAssignment& lists);

// Layers A_0, A_1, ... removed in order; A_k holds the vertices of the
// residual graph (vertices not yet peeled) meeting the peeling predicate.
struct Peeling {
  std::vector<VertexSubset> layers;
  VertexSubset residual;
  // Degree of each vertex inside the residual graph at the moment it was
  // peeled; -1 for vertices never peeled.
  std::vector<int> peel_degree;
  // uncovered[k] = number of vertices left after k layers; uncovered[0] = n.
  std::vector<int> uncovered;
};

// Peels {x : deg(x) <= t} from the residual graph until nothing is left.
// Throws kPreconditionFailed, listing the residual vertex set, when a
// nonempty residual graph has minimum degree > t. Never happens when
// t >= floor(M(T_G)).
Peeling PeelByThreshold(const Graph& g, int t);

// Geometric decay of a Wilf peeling: with lambda = floor(M) and
// s = (M - lambda + 1) / 2, r = (lambda + s) / (lambda + 1) < 1 and every
// step should satisfy uncovered[k+1] <= r * uncovered[k].
struct DecayReport {
  double r = 0.0;
  double s = 0.0;
  double worst_ratio = 0.0;  // max_k uncovered[k+1] / uncovered[k]
  bool holds = true;
};
DecayReport WilfDecay(const Peeling& p, double spectral_max);

// Colors the peeled layers last-to-first, each layer greedily from the
// palette {0..palette-1} minus colors of already colored neighbors. Residual
// vertices stay uncolored. Throws kPreconditionFailed when
// palette <= some peel_degree.
Coloring BackwardsListColor(const Graph& g, const Peeling& p, int palette);

// Peel at floor(M(T_G)) and color with floor(M(T_G)) + 1 colors.
Coloring WilfColor(const Graph& g);

// Peels {x : in-degree in the residual digraph <= k} for k generating maps,
// then colors the underlying graph with 2k + 1 colors.
Coloring FunctionGraphColor(const DirectedGraph& d);
Peeling PeelByInDegree(const DirectedGraph& d, int k);

// Peel at floor(bound) and color with floor(bound) + 1 colors. Throws
// kPreconditionFailed, identifying the offending residual set, when some
// induced subgraph has minimum degree above the bound.
Coloring MinDegreePeelColor(const Graph& g, double bound);

inline constexpr int kMaxChromaticOrder = 16;
inline constexpr int kMaxIndependenceOrder = 24;

// Exact chromatic number by dynamic programming over vertex subsets.
// Throws kCapExceeded for n > 16.
int BruteForceChromatic(const Graph& g);

// Exact independence number by branch and bound. Throws kCapExceeded for
// n > 24.
int BruteForceIndependence(const Graph& g);
VertexSubset MaximumIndependentSet(const Graph& g);

}  // namespace pmp

#endif  // PMP_COLORING_H_
