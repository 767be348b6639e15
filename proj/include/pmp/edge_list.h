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

#ifndef PMP_EDGE_LIST_H_
#define PMP_EDGE_LIST_H_

#include <optional>
#include <string>
#include <string_view>

#include "pmp/graph.h"

namespace pmp {

// Text format:
//
//   n m
//   u v        (m lines, 0 <= u < v < n)
//
// A digraph uses the header "n m directed" and one arc "x y" per line
// (x != y, orientation x -> y). Duplicate, out-of-range or extra lines are
// rejected with kMalformedInput.
Graph ParseEdgeList(std::string_view text);
std::string WriteEdgeList(const Graph& g);

DirectedGraph ParseArcList(std::string_view text);
std::string WriteArcList(const DirectedGraph& d);

// Either format. For a digraph, `graph` holds the underlying graph.
struct GraphText {
  Graph graph;
  std::optional<DirectedGraph> digraph;
};
GraphText ParseGraphText(std::string_view text);

}  // namespace pmp

#endif  // PMP_EDGE_LIST_H_
