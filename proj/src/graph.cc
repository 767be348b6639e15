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

#include "pmp/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "pmp/error.h"

namespace pmp {
namespace {

std::string EdgeName(int u, int v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

void CheckEndpoints(int n, int u, int v) {
  if (u < 0 || v < 0 || u >= n || v >= n) {
    Fail(ErrorCode::kInvalidArgument,
         "endpoint out of range in " + EdgeName(u, v) + " for n = " +
             std::to_string(n));
  }
  if (u == v) {
    Fail(ErrorCode::kInvalidArgument, "self-loop at vertex " +
                                          std::to_string(u));
  }
}

}  // namespace

Graph::Graph(std::vector<std::vector<int>> adjacency)
    : adjacency_(std::move(adjacency)) {
  int total = 0;
  max_degree_ = 0;
  min_degree_ = adjacency_.empty() ? 0 : static_cast<int>(adjacency_[0].size());
  for (const auto& nbrs : adjacency_) {
    int deg = static_cast<int>(nbrs.size());
    total += deg;
    max_degree_ = std::max(max_degree_, deg);
    min_degree_ = std::min(min_degree_, deg);
  }
  num_edges_ = total / 2;
}

Graph Graph::FromEdges(int n, std::span<const Edge> edges) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  std::vector<std::vector<int>> adjacency(n);
  for (const Edge& e : edges) {
    CheckEndpoints(n, e.u, e.v);
    adjacency[e.u].push_back(e.v);
    adjacency[e.v].push_back(e.u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nbrs = adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
    if (dup != nbrs.end()) {
      Fail(ErrorCode::kInvalidArgument,
           "duplicate edge " + EdgeName(std::min(v, *dup), std::max(v, *dup)));
    }
  }
  return Graph(std::move(adjacency));
}

Graph Graph::FromAdjacency(std::vector<std::vector<int>> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  for (int v = 0; v < n; ++v) {
    auto& nbrs = adjacency[v];
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      Fail(ErrorCode::kInvalidArgument,
           "duplicate neighbor at vertex " + std::to_string(v));
    }
    for (int u : nbrs) CheckEndpoints(n, v, u);
  }
  for (int v = 0; v < n; ++v) {
    for (int u : adjacency[v]) {
      if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v)) {
        Fail(ErrorCode::kInvalidArgument,
             "asymmetric adjacency at " + EdgeName(v, u));
      }
    }
  }
  return Graph(std::move(adjacency));
}

bool Graph::adjacent(int u, int v) const {
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (int u = 0; u < order(); ++u) {
    for (int v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

DirectedGraph DirectedGraph::FromArcs(int n, std::span<const Edge> arcs) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  DirectedGraph d;
  d.out_.assign(n, {});
  d.in_degree_.assign(n, 0);
  for (const Edge& a : arcs) {
    CheckEndpoints(n, a.u, a.v);
    d.out_[a.u].push_back(a.v);
  }
  for (int v = 0; v < n; ++v) {
    auto& out = d.out_[v];
    std::sort(out.begin(), out.end());
    auto dup = std::adjacent_find(out.begin(), out.end());
    if (dup != out.end()) {
      Fail(ErrorCode::kInvalidArgument, "duplicate arc " + EdgeName(v, *dup));
    }
    for (int w : out) ++d.in_degree_[w];
  }
  return d;
}

DirectedGraph DirectedGraph::FromFunctions(
    int n, std::vector<std::vector<int>> maps) {
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  std::vector<Edge> arcs;
  for (size_t i = 0; i < maps.size(); ++i) {
    if (static_cast<int>(maps[i].size()) != n) {
      Fail(ErrorCode::kInvalidArgument,
           "map " + std::to_string(i) + " has length " +
               std::to_string(maps[i].size()) + ", expected " +
               std::to_string(n));
    }
    for (int x = 0; x < n; ++x) {
      int y = maps[i][x];
      if (y < 0 || y >= n) {
        Fail(ErrorCode::kInvalidArgument,
             "map " + std::to_string(i) + " sends " + std::to_string(x) +
                 " outside the vertex set");
      }
      if (y != x) arcs.push_back({x, y});
    }
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  DirectedGraph d = FromArcs(n, arcs);
  d.functions_ = std::move(maps);
  return d;
}

int DirectedGraph::max_out_degree() const {
  int best = 0;
  for (const auto& out : out_) best = std::max(best, static_cast<int>(out.size()));
  return best;
}

int DirectedGraph::num_arcs() const {
  int total = 0;
  for (const auto& out : out_) total += static_cast<int>(out.size());
  return total;
}

int DirectedGraph::num_generators() const {
  return has_functions() ? static_cast<int>(functions_.size())
                         : max_out_degree();
}

std::vector<Edge> DirectedGraph::arcs() const {
  std::vector<Edge> out;
  for (int x = 0; x < order(); ++x) {
    for (int y : out_[x]) out.push_back({x, y});
  }
  return out;
}

Graph DirectedGraph::Underlying() const {
  std::vector<Edge> edges;
  for (int x = 0; x < order(); ++x) {
    for (int y : out_[x]) edges.push_back({std::min(x, y), std::max(x, y)});
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph::FromEdges(order(), edges);
}

DegreeStats GetDegreeStats(const Graph& g) {
  DegreeStats stats;
  if (g.order() == 0) return stats;
  stats.min_deg = g.min_degree();
  stats.max_deg = g.max_degree();
  stats.avg_deg = 2.0 * g.num_edges() / g.order();
  return stats;
}

VertexSubset Neighborhood(const Graph& g, const VertexSubset& a) {
  VertexSubset out(g.order());
  for (int v : a.members()) {
    for (int u : g.neighbors(v)) out.insert(u);
  }
  return out;
}

VertexSubset BallOfRadiusOne(const Graph& g, const VertexSubset& a) {
  return a | Neighborhood(g, a);
}

InducedSubgraph Induce(const Graph& g, const VertexSubset& a) {
  if (a.empty()) {
    Fail(ErrorCode::kInvalidArgument,
         "induced subgraph on the empty set has no probability measure");
  }
  InducedSubgraph result;
  result.to_parent = a.members();
  std::vector<int> to_child(g.order(), -1);
  for (size_t i = 0; i < result.to_parent.size(); ++i) {
    to_child[result.to_parent[i]] = static_cast<int>(i);
  }
  std::vector<std::vector<int>> adjacency(result.to_parent.size());
  for (size_t i = 0; i < result.to_parent.size(); ++i) {
    for (int u : g.neighbors(result.to_parent[i])) {
      if (to_child[u] >= 0) adjacency[i].push_back(to_child[u]);
    }
  }
  result.graph = Graph::FromAdjacency(std::move(adjacency));
  return result;
}

std::vector<VertexSubset> Components(const Graph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  std::vector<VertexSubset> out;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    VertexSubset comp(n);
    label[s] = static_cast<int>(out.size());
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (int u : g.neighbors(v)) {
        if (label[u] < 0) {
          label[u] = label[s];
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool IsConnected(const Graph& g) { return Components(g).size() <= 1; }

bool IsUnionOfComponents(const Graph& g, const VertexSubset& a) {
  for (const auto& comp : Components(g)) {
    if (comp.Intersects(a) && !comp.IsSubsetOf(a)) return false;
  }
  return true;
}

void Transport::Set(int x, int y, double weight) {
  if (!(weight >= 0.0) || !std::isfinite(weight)) {
    Fail(ErrorCode::kInvalidArgument,
         "transport weight must be finite and nonnegative at " +
             EdgeName(x, y));
  }
  if (weight == 0.0) {
    weights_.erase({x, y});
  } else {
    weights_[{x, y}] = weight;
  }
}

double Transport::Get(int x, int y) const {
  auto it = weights_.find({x, y});
  return it == weights_.end() ? 0.0 : it->second;
}

TransportBalance VerifyMassTransport(const Graph& g, const Transport& phi) {
  const int n = g.order();
  std::vector<double> out(n, 0.0), in(n, 0.0);
  for (const auto& [arc, w] : phi.weights()) {
    auto [x, y] = arc;
    if (x < 0 || y < 0 || x >= n || y >= n || !g.adjacent(x, y)) {
      Fail(ErrorCode::kInvalidArgument,
           "transport weight on non-edge " + EdgeName(x, y));
    }
    out[x] += w;
    in[y] += w;
  }
  TransportBalance balance;
  if (n == 0) return balance;
  balance.out_integral = std::accumulate(out.begin(), out.end(), 0.0) / n;
  balance.in_integral = std::accumulate(in.begin(), in.end(), 0.0) / n;
  balance.residual = std::abs(balance.out_integral - balance.in_integral);
  return balance;
}

}  // namespace pmp
