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

#include "pmp/edge_list.h"

#include <algorithm>
#include <charconv>
#include <string>
#include <vector>

#include "pmp/error.h"

namespace pmp {
namespace {

[[noreturn]] void Malformed(int line, const std::string& what) {
  Fail(ErrorCode::kMalformedInput,
       "edge list line " + std::to_string(line) + ": " + what);
}

std::vector<std::string_view> Tokens(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int ToInt(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    Malformed(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

struct RawList {
  int n = 0;
  bool directed = false;
  std::vector<Edge> pairs;
};

RawList ParseRaw(std::string_view text) {
  std::vector<std::vector<std::string_view>> lines;
  std::vector<int> line_numbers;
  int number = 0;
  size_t start = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    auto tokens = Tokens(text.substr(start, end - start));
    if (!tokens.empty()) {
      lines.push_back(std::move(tokens));
      line_numbers.push_back(number);
    }
    start = end + 1;
  }
  if (lines.empty()) Malformed(1, "missing header 'n m'");

  RawList raw;
  const auto& header = lines[0];
  if (header.size() == 3 && header[2] == "directed") {
    raw.directed = true;
  } else if (header.size() != 2) {
    Malformed(line_numbers[0], "header must be 'n m' or 'n m directed'");
  }
  raw.n = ToInt(header[0], line_numbers[0]);
  int m = ToInt(header[1], line_numbers[0]);
  if (raw.n < 0 || m < 0) Malformed(line_numbers[0], "negative count");
  if (static_cast<int>(lines.size()) - 1 != m) {
    Malformed(line_numbers[0], "header announces " + std::to_string(m) +
                                   " edges, found " +
                                   std::to_string(lines.size() - 1));
  }
  for (size_t i = 1; i < lines.size(); ++i) {
    const int ln = line_numbers[i];
    if (lines[i].size() != 2) Malformed(ln, "expected two vertices");
    int u = ToInt(lines[i][0], ln);
    int v = ToInt(lines[i][1], ln);
    if (u < 0 || v < 0 || u >= raw.n || v >= raw.n) {
      Malformed(ln, "vertex out of range");
    }
    if (u == v) Malformed(ln, "self-loop");
    if (!raw.directed && u > v) Malformed(ln, "edge must be written 'u v' with u < v");
    raw.pairs.push_back({u, v});
  }
  std::vector<Edge> sorted = raw.pairs;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    for (size_t i = 0; i < raw.pairs.size(); ++i) {
      if (raw.pairs[i] == *dup) {
        // Report the second occurrence.
        for (size_t j = i + 1; j < raw.pairs.size(); ++j) {
          if (raw.pairs[j] == *dup) Malformed(line_numbers[j + 1], "duplicate edge");
        }
      }
    }
  }
  return raw;
}

}  // namespace

Graph ParseEdgeList(std::string_view text) {
  RawList raw = ParseRaw(text);
  if (raw.directed) Malformed(1, "expected an undirected edge list");
  return Graph::FromEdges(raw.n, raw.pairs);
}

DirectedGraph ParseArcList(std::string_view text) {
  RawList raw = ParseRaw(text);
  if (!raw.directed) Malformed(1, "expected a directed arc list");
  return DirectedGraph::FromArcs(raw.n, raw.pairs);
}

GraphText ParseGraphText(std::string_view text) {
  RawList raw = ParseRaw(text);
  GraphText out;
  if (raw.directed) {
    out.digraph = DirectedGraph::FromArcs(raw.n, raw.pairs);
    out.graph = out.digraph->Underlying();
  } else {
    out.graph = Graph::FromEdges(raw.n, raw.pairs);
  }
  return out;
}

std::string WriteEdgeList(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " +
                    std::to_string(g.num_edges()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

std::string WriteArcList(const DirectedGraph& d) {
  std::string out = std::to_string(d.order()) + " " +
                    std::to_string(d.num_arcs()) + " directed\n";
  for (const Edge& a : d.arcs()) {
    out += std::to_string(a.u) + " " + std::to_string(a.v) + "\n";
  }
  return out;
}

}  // namespace pmp
