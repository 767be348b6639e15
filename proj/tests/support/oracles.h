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

#ifndef PMP_TESTS_SUPPORT_ORACLES_H_
#define PMP_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pmp/graph.h"

namespace pmp::testing {

// Eigenvalues of a dense symmetric matrix by cyclic Jacobi rotations, sorted
// ascending.
std::vector<double> JacobiEigenvalues(std::vector<std::vector<double>> a);

std::vector<double> OracleAdjacencySpectrum(const Graph& g);
std::vector<double> OracleLaplacianSpectrum(const Graph& g);

// Largest absolute difference between two sorted lists of equal length.
double MaxDeviation(const std::vector<double>& a, const std::vector<double>& b);

// Neighbor bitmasks, n <= 32.
std::vector<uint32_t> Masks(const Graph& g);

// Smallest k admitting a proper k-coloring, by backtracking over k = 1, 2...
int OracleChromatic(const Graph& g);

// Largest independent set size, by scanning all 2^n subsets.
int OracleIndependence(const Graph& g);

// Whether some assignment in {0,1}^n is a proper 2-coloring, by scanning all
// assignments.
bool OracleBipartite(const Graph& g);

// Perfect matching existence by plain recursion on the lowest free vertex.
bool OracleHasPerfectMatching(const std::vector<uint32_t>& nbr, int n);

// Largest ratio odd(G - A) / |A| over nonempty A as a fraction (odd, |A|),
// computing components by flood fill for every A.
std::pair<int, int> OracleTutteRatio(const Graph& g);

// min over nonempty independent A of |N(A)| / |A| as a fraction.
std::pair<int, int> OracleIndependentExpansion(const Graph& g);

// Components of G minus A by flood fill on masks.
int OracleOddComponents(const std::vector<uint32_t>& nbr, int n, uint32_t removed);

}  // namespace pmp::testing

#endif  // PMP_TESTS_SUPPORT_ORACLES_H_
