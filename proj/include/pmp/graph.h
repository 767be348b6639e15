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

#ifndef PMP_GRAPH_H_
#define PMP_GRAPH_H_

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "pmp/vertex_subset.h"

namespace pmp {

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Finite simple undirected graph on vertices 0..n-1 carrying the uniform
// probability measure. Immutable after construction; neighbor lists are
// sorted and symmetric.
class Graph {
 public:
  Graph() = default;

  // Throws kInvalidArgument on self-loops, duplicate edges (in either
  // orientation) or out-of-range endpoints.
  static Graph FromEdges(int n, std::span<const Edge> edges);
  static Graph FromEdges(int n, std::initializer_list<Edge> edges) {
    return FromEdges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Builds from per-vertex neighbor lists; the lists must already be
  // symmetric and loop-free.
  static Graph FromAdjacency(std::vector<std::vector<int>> adjacency);

  int order() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return num_edges_; }
  int max_degree() const { return max_degree_; }
  int min_degree() const { return min_degree_; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  bool adjacent(int u, int v) const;
  bool is_regular() const { return min_degree_ == max_degree_; }

  // Edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  explicit Graph(std::vector<std::vector<int>> adjacency);

  std::vector<std::vector<int>> adjacency_;
  int num_edges_ = 0;
  int max_degree_ = 0;
  int min_degree_ = 0;
};

// Finite directed graph without self-loops, optionally remembering the maps
// f_1..f_k it was generated from (arc x -> f_i(x) whenever f_i(x) != x).
class DirectedGraph {
 public:
  DirectedGraph() = default;

  // Throws on self-loops, duplicate arcs or out-of-range endpoints.
  static DirectedGraph FromArcs(int n, std::span<const Edge> arcs);
  // Every map must have length n with values in [0, n). Coinciding images
  // f_i(x) == f_j(x) yield a single arc.
  static DirectedGraph FromFunctions(int n,
                                     std::vector<std::vector<int>> maps);

  int order() const { return static_cast<int>(out_.size()); }
  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return in_degree_[v]; }
  int max_out_degree() const;
  int num_arcs() const;

  bool has_functions() const { return !functions_.empty(); }
  const std::vector<std::vector<int>>& functions() const { return functions_; }
  // Number of generating maps; for a digraph given by arcs, its maximum
  // out-degree (every such digraph is generated by that many maps).
  int num_generators() const;

  // Arcs (x, y) in lexicographic order.
  std::vector<Edge> arcs() const;
  // Forget orientation and merge antiparallel arcs.
  Graph Underlying() const;

 private:
  std::vector<std::vector<int>> out_;
  std::vector<int> in_degree_;
  std::vector<std::vector<int>> functions_;
};

struct DegreeStats {
  int min_deg = 0;
  int max_deg = 0;
  double avg_deg = 0.0;
};

DegreeStats GetDegreeStats(const Graph& g);

// N(A): vertices having at least one neighbor in A.
VertexSubset Neighborhood(const Graph& g, const VertexSubset& a);

// A together with N(A).
VertexSubset BallOfRadiusOne(const Graph& g, const VertexSubset& a);

struct InducedSubgraph {
  Graph graph;
  // to_parent[i] is the vertex of the original graph relabeled as i.
  std::vector<int> to_parent;
};

// G restricted to A, relabeled in increasing vertex order. Throws
// kInvalidArgument when A is empty.
InducedSubgraph Induce(const Graph& g, const VertexSubset& a);

// Connected components ordered by least vertex.
std::vector<VertexSubset> Components(const Graph& g);
bool IsConnected(const Graph& g);

// True iff A is a union of connected components.
bool IsUnionOfComponents(const Graph& g, const VertexSubset& a);

// Nonnegative weights on ordered pairs (x, y) of adjacent vertices.
class Transport {
 public:
  // Throws kInvalidArgument for negative or non-finite weights.
  void Set(int x, int y, double weight);
  double Get(int x, int y) const;
  const std::map<std::pair<int, int>, double>& weights() const {
    return weights_;
  }

 private:
  std::map<std::pair<int, int>, double> weights_;
};

struct TransportBalance {
  double out_integral = 0.0;  // (1/n) sum_x sum_y phi(x, y)
  double in_integral = 0.0;   // (1/n) sum_y sum_x phi(x, y)
  double residual = 0.0;      // |out_integral - in_integral|
};

// Integrates outflow and inflow of `phi` under the uniform measure. Throws
// kInvalidArgument when phi carries weight on a pair that is not an edge.
TransportBalance VerifyMassTransport(const Graph& g, const Transport& phi);

}  // namespace pmp

#endif  // PMP_GRAPH_H_
