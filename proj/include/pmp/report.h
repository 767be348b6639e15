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

#ifndef PMP_REPORT_H_
#define PMP_REPORT_H_

#include <string>
#include <string_view>

#include "json.hpp"
#include "pmp/bipartite.h"
#include "pmp/coloring.h"
#include "pmp/graph.h"
#include "pmp/matching.h"
#include "pmp/spectral.h"

namespace pmp {

inline constexpr std::string_view kVersion = "0.1.0";

// Rounds to 12 significant digits; magnitudes below 1e-12 (eigensolver
// noise around zero) become 0.
nlohmann::json Real(double x);

// 64-bit FNV-1a of the text, as 16 lowercase hex digits.
std::string Digest(std::string_view text);

nlohmann::json SubsetJson(const VertexSubset& s);

// {"n", "d", "spectrum_adj", "spectrum_lap", "M", "m", "wilf", "hoffman",
//  "gap", "mL", "ML"}; hoffman and gap are null when undefined.
nlohmann::json SpectralReportJson(const Graph& g);

nlohmann::json BoundsJson(const SpectralBounds& b);
nlohmann::json ColoringJson(std::string_view algorithm, const Coloring& c,
                            bool proper, int bound);
nlohmann::json BipartiteJson(const BipartiteVerdict& v);
nlohmann::json TutteJson(const TutteReport& r);

// Top-level report. Keys are emitted sorted.
nlohmann::json MakeReport(std::string_view command, std::string_view digest,
                          nlohmann::json payload);
std::string DumpReport(const nlohmann::json& report);

}  // namespace pmp

#endif  // PMP_REPORT_H_
