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

#include "pmp/cli.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pmp/bipartite.h"
#include "pmp/coloring.h"
#include "pmp/edge_list.h"
#include "pmp/error.h"
#include "pmp/generators.h"
#include "pmp/limits.h"
#include "pmp/matching.h"
#include "pmp/report.h"
#include "pmp/spectral.h"
#include "pmp/verify.h"

namespace pmp {
namespace {

using nlohmann::json;

struct Options {
  // Shared.
  std::string input;
  uint64_t seed = 0;
  double tol = kSpectralTol;
  std::string mode = "exhaustive";
  int max_n = 64;
  bool json_flag = false;

  // gen.
  std::optional<int> cycle, complete, path;
  std::vector<int> complete_bipartite, random_regular;
  std::vector<std::string> gnp;
  bool petersen = false;
  bool paley = false;
  std::string maps;
  bool subdivide = false;

  // color.
  std::string algorithm = "wilf";
  std::optional<double> bound;

  // tutte.
  int samples = 4096;

  // limit.
  std::string family = "cycle";
  std::vector<double> interval;
  int degree = 3;
};

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) parts.push_back(item);
  return parts;
}

int ParseInt(const std::string& token, const std::string& what) {
  size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != token.size()) {
    Fail(ErrorCode::kInvalidArgument, "bad integer '" + token + "' in " + what);
  }
  return value;
}

// "1 2 0;3 3 3" -> two maps on {0, 1, 2}; entries separated by spaces or
// commas.
std::vector<std::vector<int>> ParseMaps(const std::string& text) {
  std::vector<std::vector<int>> maps;
  for (const std::string& part : Split(text, ';')) {
    std::vector<int> f;
    std::string normalized = part;
    for (char& c : normalized) {
      if (c == ',') c = ' ';
    }
    std::istringstream stream(normalized);
    std::string token;
    while (stream >> token) f.push_back(ParseInt(token, "--maps"));
    maps.push_back(std::move(f));
  }
  if (maps.empty()) Fail(ErrorCode::kInvalidArgument, "--maps is empty");
  return maps;
}

std::string ReadInput(const Options& opts, std::istream& in) {
  if (!opts.input.empty()) {
    std::ifstream file(opts.input);
    if (!file) {
      Fail(ErrorCode::kInvalidArgument, "cannot open '" + opts.input + "'");
    }
    return std::string(std::istreambuf_iterator<char>(file), {});
  }
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct LoadedGraph {
  GraphText parsed;
  std::string digest;
};

LoadedGraph Load(const Options& opts, std::istream& in) {
  LoadedGraph loaded{ParseGraphText(ReadInput(opts, in)), ""};
  loaded.digest = Digest(loaded.parsed.digraph
                             ? WriteArcList(*loaded.parsed.digraph)
                             : WriteEdgeList(loaded.parsed.graph));
  return loaded;
}

void Emit(std::ostream& out, std::string_view command, const json& digest,
          json payload) {
  json report = MakeReport(command, "", std::move(payload));
  report["input_digest"] = digest;
  out << DumpReport(report);
}

int RunGen(const Options& opts, std::ostream& out) {
  int chosen = (opts.cycle ? 1 : 0) + (opts.complete ? 1 : 0) +
               (opts.path ? 1 : 0) + (opts.complete_bipartite.empty() ? 0 : 1) +
               (opts.random_regular.empty() ? 0 : 1) +
               (opts.gnp.empty() ? 0 : 1) + (opts.petersen ? 1 : 0) +
               (opts.paley ? 1 : 0) + (opts.maps.empty() ? 0 : 1);
  if (chosen != 1) {
    Fail(ErrorCode::kInvalidArgument, "gen needs exactly one generator");
  }
  if (opts.paley || !opts.maps.empty()) {
    if (opts.subdivide) {
      Fail(ErrorCode::kInvalidArgument, "--subdivide needs an undirected graph");
    }
    DirectedGraph d =
        opts.paley ? PaleyTournament() : FunctionGraph(ParseMaps(opts.maps));
    out << WriteArcList(d);
    return kExitOk;
  }
  Graph g;
  if (opts.cycle) {
    g = Cycle(*opts.cycle);
  } else if (opts.complete) {
    g = Complete(*opts.complete);
  } else if (opts.path) {
    g = Path(*opts.path);
  } else if (!opts.complete_bipartite.empty()) {
    if (opts.complete_bipartite.size() != 2) {
      Fail(ErrorCode::kInvalidArgument, "--complete-bipartite takes a,b");
    }
    g = CompleteBipartite(opts.complete_bipartite[0],
                          opts.complete_bipartite[1]);
  } else if (!opts.random_regular.empty()) {
    if (opts.random_regular.size() != 2) {
      Fail(ErrorCode::kInvalidArgument, "--random-regular takes n,d");
    }
    g = RandomRegular(opts.random_regular[0], opts.random_regular[1],
                      opts.seed);
  } else if (!opts.gnp.empty()) {
    if (opts.gnp.size() != 2) {
      Fail(ErrorCode::kInvalidArgument, "--gnp takes n,p");
    }
    double p = 0.0;
    try {
      p = std::stod(opts.gnp[1]);
    } catch (const std::exception&) {
      Fail(ErrorCode::kInvalidArgument, "bad probability in --gnp");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
      Fail(ErrorCode::kInvalidArgument, "--gnp probability outside [0, 1]");
    }
    g = RandomGnp(ParseInt(opts.gnp[0], "--gnp"), p, opts.seed);
  } else {
    g = Petersen();
  }
  if (opts.subdivide) g = Subdivide(g);
  out << WriteEdgeList(g);
  return kExitOk;
}

int RunColor(const Options& opts, std::istream& in, std::ostream& out) {
  LoadedGraph loaded = Load(opts, in);
  const Graph& g = loaded.parsed.graph;
  Coloring c;
  int bound = 0;
  if (opts.algorithm == "function") {
    if (!loaded.parsed.digraph) {
      Fail(ErrorCode::kInvalidArgument,
           "the function algorithm needs a directed arc list");
    }
    c = FunctionGraphColor(*loaded.parsed.digraph);
    bound = 2 * loaded.parsed.digraph->max_out_degree() + 1;
  } else if (opts.algorithm == "wilf") {
    c = WilfColor(g);
    bound = ComputeBounds(g).wilf;
  } else if (opts.algorithm == "min-degree") {
    if (!opts.bound) {
      Fail(ErrorCode::kInvalidArgument, "min-degree coloring needs --bound");
    }
    c = MinDegreePeelColor(g, *opts.bound);
    bound = FloorSnapped(*opts.bound) + 1;
  } else {
    Fail(ErrorCode::kInvalidArgument,
         "unknown algorithm '" + opts.algorithm + "'");
  }
  Emit(out, "color", loaded.digest,
       ColoringJson(opts.algorithm, c, IsProper(g, c), bound));
  return kExitOk;
}

int RunTutte(const Options& opts, std::istream& in, std::ostream& out) {
  LoadedGraph loaded = Load(opts, in);
  TutteOptions topts;
  if (opts.mode == "exhaustive") {
    topts.mode = TutteMode::kExhaustive;
  } else if (opts.mode == "randomized") {
    topts.mode = TutteMode::kRandomized;
  } else {
    Fail(ErrorCode::kInvalidArgument, "unknown mode '" + opts.mode + "'");
  }
  topts.seed = opts.seed;
  topts.samples = opts.samples;
  const Graph& g = loaded.parsed.graph;
  topts.with_matching = g.order() <= kMaxMatchingOrder;
  Emit(out, "tutte", loaded.digest, TutteJson(TutteScan(g, topts)));
  return kExitOk;
}

GraphFamily MakeFamily(const Options& opts) {
  if (opts.family == "cycle") return CycleFamily(opts.max_n);
  if (opts.family == "k4") return ConstantFamily("k4", Complete(4), opts.max_n);
  if (opts.family == "k2") return ConstantFamily("k2", Complete(2), opts.max_n);
  if (opts.family == "random-regular") {
    std::vector<int> sizes;
    for (int n = opts.degree + 1; n <= opts.max_n; ++n) {
      if (n * opts.degree % 2 == 0) sizes.push_back(n);
    }
    return RandomRegularFamily(opts.degree, opts.seed, sizes);
  }
  Fail(ErrorCode::kInvalidArgument, "unknown family '" + opts.family + "'");
}

int RunLimit(const Options& opts, std::ostream& out) {
  const GraphFamily family = MakeFamily(opts);
  double lo = -family.degree_bound;
  double hi = family.degree_bound;
  if (!opts.interval.empty()) {
    if (opts.interval.size() != 2) {
      Fail(ErrorCode::kInvalidArgument, "--interval takes lo,hi");
    }
    lo = opts.interval[0];
    hi = opts.interval[1];
  }
  const SpectrumAccumulation acc =
      AccumulateSpectra(family, opts.max_n, opts.tol);
  const GapPersistence gaps = ComputeGapPersistence(family, opts.max_n);
  json per_index = json::array();
  for (const GapEntry& e : gaps.entries) {
    json entry{{"index", e.index}};
    entry["gap"] = e.gap ? Real(*e.gap) : json(nullptr);
    if (e.error) entry["error"] = *e.error;
    per_index.push_back(std::move(entry));
  }
  json payload{{"family", family.name},
               {"interval", {Real(lo), Real(hi)}},
               {"max_n", opts.max_n},
               {"points_count", acc.points.size()},
               {"max_gap", Real(MaxGap(acc, lo, hi))},
               {"per_index_gaps", std::move(per_index)},
               {"trend", gaps.trend}};
  payload["min_gap"] = gaps.min_gap ? Real(*gaps.min_gap) : json(nullptr);
  payload["max_spectral_gap"] =
      gaps.max_gap ? Real(*gaps.max_gap) : json(nullptr);
  Emit(out, "limit", nullptr, std::move(payload));
  return kExitOk;
}

int RunVerify(std::ostream& out) {
  const std::vector<CheckResult> results = RunVerificationSuite();
  bool all = true;
  json checks = json::array();
  for (const CheckResult& r : results) {
    all = all && r.passed;
    checks.push_back({{"name", r.name}, {"passed", r.passed},
                      {"detail", r.detail}});
  }
  Emit(out, "verify", nullptr, {{"checks", checks}, {"passed", all}});
  return all ? kExitOk : kExitCheckFailed;
}

void EmitError(std::ostream& out, std::string_view code,
               const std::string& message) {
  json error{{"error", {{"code", code}, {"message", message}}}};
  out << error.dump(2) << "\n";
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Spectral analysis of finite graphs", "pmpspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto add_common = [&opts](CLI::App* sub) {
    sub->add_option("--input", opts.input, "Edge-list file (default: stdin)");
    sub->add_option("--tol", opts.tol, "Spectral tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--json", opts.json_flag, "JSON output (always on)");
  };

  CLI::App* gen = app.add_subcommand("gen", "Write a generated graph");
  gen->add_option("--cycle", opts.cycle, "Cycle C_n");
  gen->add_option("--complete", opts.complete, "Complete graph K_n");
  gen->add_option("--path", opts.path, "Path P_n");
  gen->add_option("--complete-bipartite", opts.complete_bipartite,
                  "K_{a,b} as a,b")
      ->delimiter(',');
  gen->add_option("--random-regular", opts.random_regular,
                  "Random d-regular graph as n,d")
      ->delimiter(',');
  gen->add_option("--gnp", opts.gnp, "Erdos-Renyi graph as n,p")
      ->delimiter(',');
  gen->add_flag("--petersen", opts.petersen, "Petersen graph");
  gen->add_flag("--paley", opts.paley, "Paley tournament on Z/7");
  gen->add_option("--maps", opts.maps,
                  "Function system, maps separated by ';'");
  gen->add_flag("--subdivide", opts.subdivide, "Subdivide every edge");
  gen->add_option("--seed", opts.seed, "Random seed");

  std::vector<CLI::App*> graph_commands;
  for (auto [name, help] : {std::pair{"spectrum", "Spectra and extremes"},
                            std::pair{"bounds", "Spectral bounds"},
                            std::pair{"color", "Coloring algorithms"},
                            std::pair{"bipartite", "Spectral bipartiteness"},
                            std::pair{"tutte", "Tutte condition scan"}}) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    graph_commands.push_back(sub);
  }
  CLI::App* color = app.get_subcommand("color");
  color->add_option("--algorithm", opts.algorithm,
                    "wilf | function | min-degree");
  color->add_option("--bound", opts.bound,
                    "Spectral bound for min-degree peeling");
  CLI::App* tutte = app.get_subcommand("tutte");
  tutte->add_option("--mode", opts.mode, "exhaustive | randomized");
  tutte->add_option("--seed", opts.seed, "Random seed");
  tutte->add_option("--samples", opts.samples, "Random subsets")
      ->check(CLI::PositiveNumber);

  CLI::App* limit = app.add_subcommand("limit", "Limit spectrum of a family");
  limit->add_option("--family", opts.family, "cycle | k2 | k4 | random-regular");
  limit->add_option("--max-n", opts.max_n, "Largest index")
      ->check(CLI::PositiveNumber);
  limit->add_option("--interval", opts.interval, "lo,hi")->delimiter(',');
  limit->add_option("--seed", opts.seed, "Random seed");
  limit->add_option("--degree", opts.degree, "Degree of random-regular");
  limit->add_option("--tol", opts.tol, "Merging tolerance")
      ->check(CLI::PositiveNumber);
  limit->add_flag("--json", opts.json_flag, "JSON output (always on)");

  CLI::App* verify = app.add_subcommand("verify", "Built-in invariant suite");
  verify->add_flag("--json", opts.json_flag, "JSON output (always on)");

  std::vector<const char*> argv{"pmpspec"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    err << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    EmitError(out, "usage", e.what());
    return kExitInputError;
  }

  try {
    if (gen->parsed()) return RunGen(opts, out);
    if (limit->parsed()) return RunLimit(opts, out);
    if (verify->parsed()) return RunVerify(out);
    if (color->parsed()) return RunColor(opts, in, out);
    if (tutte->parsed()) return RunTutte(opts, in, out);
    LoadedGraph loaded = Load(opts, in);
    const Graph& g = loaded.parsed.graph;
    if (app.get_subcommand("spectrum")->parsed()) {
      Emit(out, "spectrum", loaded.digest, SpectralReportJson(g));
    } else if (app.get_subcommand("bounds")->parsed()) {
      Emit(out, "bounds", loaded.digest, BoundsJson(ComputeBounds(g)));
    } else {
      json payload = BipartiteJson(SpectralBipartiteTest(g, opts.tol));
      payload["tol"] = opts.tol;
      Emit(out, "bipartite", loaded.digest, std::move(payload));
    }
    return kExitOk;
  } catch (const Error& e) {
    EmitError(out, ErrorCodeName(e.code()), e.what());
    return e.code() == ErrorCode::kCapExceeded ? kExitCapExceeded
                                               : kExitInputError;
  }
}

}  // namespace pmp
