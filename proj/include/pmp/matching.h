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

#ifndef PMP_MATCHING_H_
#define PMP_MATCHING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "pmp/graph.h"
#include "pmp/vertex_subset.h"

namespace pmp {

inline constexpr int kMaxTutteExhaustiveOrder = 22;
inline constexpr int kMaxMatchingOrder = 24;
inline constexpr int kMaxExpansionOrder = 24;

// Number of odd-cardinality components of G minus A.
int OddComponentCount(const Graph& g, const VertexSubset& a);

// nu_A(O_A) under the uniform measure: each odd component of G minus A,
// whatever its size 2k+1, carries mass (2k+1)/n * 1/(2k+1) = 1/n.
double OddComponentMeasure(const Graph& g, const VertexSubset& a);

enum class TutteMode { kExhaustive, kRandomized };

struct TutteOptions {
  TutteMode mode = TutteMode::kExhaustive;
  uint64_t seed = 0;
  int samples = 4096;          // randomized mode only
  bool with_spectral = true;   // compute bh_condition
  bool with_matching = true;   // run the matching oracle when n is even
};

struct TutteReport {
  // c_star = max over scanned nonempty A of odd(G - A) / |A|, kept as the
  // exact fraction odd_count / witness_size as well.
  double c_star = 0.0;
  int odd_count = 0;
  int witness_size = 0;
  VertexSubset witness;
  bool classical_holds = false;  // c_star <= 1
  bool strict_holds = false;     // c_star < 1
  TutteMode mode = TutteMode::kExhaustive;
  int64_t subsets_scanned = 0;
  bool bh_condition = false;  // connected, n >= 2 and 2 mL >= ML
  std::optional<std::vector<Edge>> matching;
};

// Exhaustive mode scans all 2^n - 1 nonempty A (n <= 22, else
// kCapExceeded); ties keep the A with the smallest bitmask. Randomized mode
// scans singletons, neighborhoods of low-degree vertices and random small
// subsets drawn from `seed`.
TutteReport TutteScan(const Graph& g, const TutteOptions& options = {});

// 2 mL >= ML for a connected regular graph; kPreconditionFailed otherwise.
bool BrouwerHaemersTest(const Graph& g);

struct TwoSetResult {
  double lhs = 0.0;  // mu(Y) mu(Z) / ((1 - mu(Y)) (1 - mu(Z)))
  double rhs = 0.0;  // ((ML - mL) / (ML + mL))^2
  bool holds = false;
};

// Requires Y, Z nonempty, disjoint, with no edge between them, on a
// connected regular graph; kPreconditionFailed names the violation.
TwoSetResult TwoSetInequality(const Graph& g, const VertexSubset& y,
                              const VertexSubset& z);

struct ExpansionResult {
  double min_ratio = 0.0;  // min over nonempty independent A of |N(A)|/|A|
  int neighborhood_size = 0;
  int set_size = 0;
  VertexSubset witness;
};

// Exhaustive over independent sets, n <= 24. Ties keep the smallest bitmask.
ExpansionResult IndependentExpansion(const Graph& g);

// A perfect matching found by exhaustive search with memoized dead ends, or
// nullopt. Deterministic; n <= 24, else kCapExceeded.
std::optional<std::vector<Edge>> PerfectMatchingOracle(const Graph& g);

bool IsPerfectMatching(const Graph& g, const std::vector<Edge>& matching);

}  // namespace pmp

#endif  // PMP_MATCHING_H_
