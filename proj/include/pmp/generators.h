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

#ifndef PMP_GENERATORS_H_
#define PMP_GENERATORS_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pmp/graph.h"

namespace pmp {

// All constructors throw kInvalidArgument on sizes outside their domain.

Graph Cycle(int n);                 // n >= 3
Graph Complete(int n);              // n >= 1
Graph CompleteBipartite(int a, int b);  // a, b >= 1; side a is 0..a-1
Graph Path(int n);                  // n >= 1
Graph Petersen();                   // outer 5-cycle 0..4, inner pentagram 5..9

// Replaces every edge of a d-regular graph (d >= 1) by a path of length two.
// Original vertices keep their labels; the midpoint of the k-th edge (in
// lexicographic order) becomes vertex n + k. The result is (2, d)-biregular.
Graph Subdivide(const Graph& g);

// Directed graph with arcs x -> maps[i][x] for every map i and every
// non-fixed point x.
DirectedGraph FunctionGraph(std::vector<std::vector<int>> maps);

// The tournament on Z/7 generated by x+1, x+2, x+4.
DirectedGraph PaleyTournament();

// Uniform pairing model with rejection of loops and multi-edges, at most
// 1000 attempts. Throws kInvalidArgument when n*d is odd or d >= n, and
// kSearchExhausted when every attempt is rejected.
Graph RandomRegular(int n, int d, uint64_t seed);

// Erdos-Renyi G(n, p).
Graph RandomGnp(int n, double p, uint64_t seed);

// An indexed sequence of bounded-degree graphs.
struct GraphFamily {
  std::string name;
  std::function<Graph(int)> generator;
  std::vector<int> index_set;  // increasing
  int degree_bound = 0;
};

// Cycles C_k for k = 3..max_n.
GraphFamily CycleFamily(int max_n);
// The same graph at every index 1..length.
GraphFamily ConstantFamily(std::string name, Graph g, int length);
// random_regular(k, d, seed + k) for k in `sizes`.
GraphFamily RandomRegularFamily(int d, uint64_t seed, std::vector<int> sizes);

}  // namespace pmp

#endif  // PMP_GENERATORS_H_
