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

#include "pmp/report.h"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

namespace pmp {

using nlohmann::json;

json Real(double x) {
  if (!std::isfinite(x)) return nullptr;
  if (std::abs(x) < 1e-12) return 0.0;
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return std::strtod(buf, nullptr);
}

std::string Digest(std::string_view text) {
  uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json SubsetJson(const VertexSubset& s) { return s.members(); }

namespace {

json SpectrumJson(const Spectrum& s) {
  json out = json::array();
  for (double v : s.values()) out.push_back(Real(v));
  return out;
}

}  // namespace

json SpectralReportJson(const Graph& g) {
  const SpectralBounds b = ComputeBounds(g);
  json out;
  out["n"] = g.order();
  out["d"] = g.max_degree();
  out["spectrum_adj"] = SpectrumJson(AdjacencySpectrum(g));
  out["spectrum_lap"] = SpectrumJson(LaplacianSpectrum(g));
  out["M"] = Real(b.M);
  out["m"] = Real(b.m);
  out["wilf"] = b.wilf;
  out["hoffman"] = b.hoffman ? json(*b.hoffman) : json(nullptr);
  out["gap"] = b.gap ? Real(*b.gap) : json(nullptr);
  out["mL"] = Real(b.mL);
  out["ML"] = Real(b.ML);
  return out;
}

json BoundsJson(const SpectralBounds& b) {
  json out;
  out["M"] = Real(b.M);
  out["m"] = Real(b.m);
  out["avg_deg"] = Real(b.avg_deg);
  out["max_deg"] = b.max_deg;
  out["min_deg"] = b.min_deg;
  out["wilf"] = b.wilf;
  out["hoffman"] = b.hoffman ? json(*b.hoffman) : json(nullptr);
  out["gap"] = b.gap ? Real(*b.gap) : json(nullptr);
  out["mL"] = Real(b.mL);
  out["ML"] = Real(b.ML);
  out["independence_bound"] =
      b.independence_bound ? Real(*b.independence_bound) : json(nullptr);
  out["mindeg_independence_bound"] = Real(b.mindeg_independence_bound);
  return out;
}

json ColoringJson(std::string_view algorithm, const Coloring& c, bool proper,
                  int bound) {
  json colors = json::array();
  for (const auto& col : c.colors) {
    colors.push_back(col ? json(*col) : json(nullptr));
  }
  json out;
  out["algorithm"] = algorithm;
  out["palette"] = c.palette_size;
  out["colors"] = std::move(colors);
  out["proper"] = proper;
  out["bound"] = bound;
  return out;
}

json BipartiteJson(const BipartiteVerdict& v) {
  json out;
  out["symmetric_spectrum"] = v.symmetric_spectrum;
  out["minus_d_in_spectrum"] = v.minus_d_in_spectrum;
  out["regular"] = v.regular;
  out["used_spectral_max"] = v.used_spectral_max;
  if (v.bipartition) {
    out["bipartition"] = {{"A", SubsetJson(v.bipartition->a)},
                          {"B", SubsetJson(v.bipartition->b)}};
  } else {
    out["bipartition"] = nullptr;
  }
  out["defect"] = SubsetJson(v.defect);
  return out;
}

json TutteJson(const TutteReport& r) {
  json out;
  out["c_star"] = Real(r.c_star);
  out["odd_components"] = r.odd_count;
  out["witness"] = SubsetJson(r.witness);
  out["classical_holds"] = r.classical_holds;
  out["strict_holds"] = r.strict_holds;
  out["mode"] = r.mode == TutteMode::kExhaustive ? "exhaustive" : "randomized";
  out["subsets_scanned"] = r.subsets_scanned;
  out["bh_condition"] = r.bh_condition;
  if (r.matching) {
    json edges = json::array();
    for (const Edge& e : *r.matching) edges.push_back({e.u, e.v});
    out["matching"] = std::move(edges);
  } else {
    out["matching"] = nullptr;
  }
  return out;
}

json MakeReport(std::string_view command, std::string_view digest,
                json payload) {
  json report;
  report["command"] = command;
  report["input_digest"] = digest;
  report["payload"] = std::move(payload);
  report["version"] = kVersion;
  return report;
}

std::string DumpReport(const json& report) { return report.dump(2) + "\n"; }

}  // namespace pmp
