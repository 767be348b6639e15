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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "pmp/bipartite.h"
#include "pmp/cli.h"
#include "pmp/coloring.h"
#include "pmp/edge_list.h"
#include "pmp/error.h"
#include "pmp/generators.h"
#include "pmp/matching.h"
#include "pmp/report.h"
#include "pmp/spectral.h"
#include "pmp/verify.h"

namespace py = pybind11;

namespace pmp {
namespace {

Graph MakeGraph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (const auto& [u, v] : edges) list.push_back({u, v});
  return Graph::FromEdges(n, list);
}

std::vector<std::pair<int, int>> EdgePairs(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

std::vector<int> Colors(const Coloring& c) {
  std::vector<int> out;
  out.reserve(c.colors.size());
  for (const auto& x : c.colors) out.push_back(x.value_or(-1));
  return out;
}

std::string ColoringReport(std::string_view algorithm, const Graph& g,
                           const Coloring& c, int bound) {
  return ColoringJson(algorithm, c, IsProper(g, c), bound).dump();
}

py::tuple CallCli(const std::vector<std::string>& args, const std::string& input) {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = RunCli(args, in, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace
}  // namespace pmp

PYBIND11_MODULE(_pmpspec, m) {
  using namespace pmp;
  m.doc() = "Spectral bounds, colorings and matchings of finite graphs.";

  py::register_exception<Error>(m, "PmpError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init(&MakeGraph), py::arg("n"), py::arg("edges"))
      .def_static("parse", &ParseEdgeList, py::arg("text"))
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("max_degree", &Graph::max_degree)
      .def_property_readonly("min_degree", &Graph::min_degree)
      .def_property_readonly("is_regular", &Graph::is_regular)
      .def("degree", &Graph::degree)
      .def("neighbors", &Graph::neighbors)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &EdgePairs)
      .def("to_edge_list", &WriteEdgeList)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) +
               ", m=" + std::to_string(g.num_edges()) + ")";
      });

  m.def("cycle", &Cycle, py::arg("n"));
  m.def("complete", &Complete, py::arg("n"));
  m.def("path", &Path, py::arg("n"));
  m.def("complete_bipartite", &CompleteBipartite, py::arg("a"), py::arg("b"));
  m.def("petersen", &Petersen);
  m.def("subdivide", &Subdivide, py::arg("g"));
  m.def("random_regular", &RandomRegular, py::arg("n"), py::arg("d"), py::arg("seed"));
  m.def("random_gnp", &RandomGnp, py::arg("n"), py::arg("p"), py::arg("seed"));

  m.def("adjacency_spectrum",
        [](const Graph& g) { return AdjacencySpectrum(g).values(); });
  m.def("laplacian_spectrum",
        [](const Graph& g) { return LaplacianSpectrum(g).values(); });
  m.def("spectral_gap", &SpectralGap, py::arg("g"));
  m.def("_spectral_report", [](const Graph& g) { return SpectralReportJson(g).dump(); });

  m.def("wilf_color", [](const Graph& g) { return Colors(WilfColor(g)); });
  m.def("_wilf_color_report", [](const Graph& g) {
    return ColoringReport("wilf", g, WilfColor(g), ComputeBounds(g).wilf);
  });
  m.def("function_graph_color", [](std::vector<std::vector<int>> maps) {
    const DirectedGraph d = FunctionGraph(std::move(maps));
    return Colors(FunctionGraphColor(d));
  });
  m.def("chromatic_number", &BruteForceChromatic, py::arg("g"));
  m.def("independence_number", &BruteForceIndependence, py::arg("g"));

  m.def("_bipartite_report", [](const Graph& g, double tol) {
    return BipartiteJson(SpectralBipartiteTest(g, tol)).dump();
  }, py::arg("g"), py::arg("tol") = kSpectralTol);
  m.def("_tutte_report", [](const Graph& g, bool randomized, uint64_t seed, int samples) {
    TutteOptions options;
    options.mode = randomized ? TutteMode::kRandomized : TutteMode::kExhaustive;
    options.seed = seed;
    options.samples = samples;
    return TutteJson(TutteScan(g, options)).dump();
  }, py::arg("g"), py::arg("randomized") = false, py::arg("seed") = 0,
        py::arg("samples") = 4096);
  m.def("perfect_matching", [](const Graph& g) -> std::optional<std::vector<std::pair<int, int>>> {
    const auto matching = PerfectMatchingOracle(g);
    if (!matching) return std::nullopt;
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : *matching) out.emplace_back(e.u, e.v);
    return out;
  }, py::arg("g"));

  m.def("run_verification", [] {
    std::vector<py::tuple> out;
    for (const CheckResult& r : RunVerificationSuite()) {
      out.push_back(py::make_tuple(r.name, r.passed, r.detail));
    }
    return out;
  });
  m.def("run_cli", &CallCli, py::arg("args"), py::arg("input") = "");
  m.attr("__version__") = std::string(kVersion);
}
