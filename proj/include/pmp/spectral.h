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

#ifndef PMP_SPECTRAL_H_
#define PMP_SPECTRAL_H_

#include <optional>
#include <vector>

#include "pmp/graph.h"
#include "pmp/vertex_subset.h"

namespace pmp {

// Default tolerance for every spectral comparison. Comparisons are relative:
// two reals x, y agree when |x - y| <= tol * max(1, |x|, |y|).
inline constexpr double kSpectralTol = 1e-9;

// Largest dense eigenproblem accepted.
inline constexpr int kMaxDenseOrder = 4096;

bool ApproxEqual(double x, double y, double tol = kSpectralTol);

// floor(x + tol) and ceil(x - tol): integral spectral quantities computed in
// floating point must not land one below (or above) their true value.
int FloorSnapped(double x, double tol = kSpectralTol);
int CeilSnapped(double x, double tol = kSpectralTol);

// Multiset of real eigenvalues sorted ascending.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<double> values, double tol = kSpectralTol);

  const std::vector<double>& values() const { return values_; }
  double tol() const { return tol_; }
  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  double min() const;  // m(T)
  double max() const;  // M(T)

  bool Contains(double x) const;
  // Number of eigenvalues agreeing with x.
  int Multiplicity(double x) const;
  // {-x : x in values}, re-sorted.
  Spectrum Negated() const;
  // Multiset union.
  Spectrum Union(const Spectrum& other) const;
  // Multiset equality: pairs the i-th smallest values of both lists.
  bool ApproxEquals(const Spectrum& other) const;

 private:
  std::vector<double> values_;
  double tol_ = kSpectralTol;
};

struct Extremes {
  double m = 0.0;
  double M = 0.0;
};

Spectrum AdjacencySpectrum(const Graph& g);
Spectrum LaplacianSpectrum(const Graph& g);

struct Eigenpairs {
  std::vector<double> values;                // ascending
  std::vector<std::vector<double>> vectors;  // vectors[i] pairs with values[i]
};
// Orthonormal eigenvectors of the adjacency matrix.
Eigenpairs AdjacencyEigenpairs(const Graph& g);

// (first, last) value. Throws kInvalidArgument on an empty spectrum.
Extremes GetExtremes(const Spectrum& s);

// For a connected d-regular graph: d minus the largest eigenvalue strictly
// below d. Throws kPreconditionFailed otherwise.
double SpectralGap(const Graph& g);

// Extremes of the Laplacian on mean-zero functions, (lambda_2, lambda_n) of
// the Laplacian. Throws kPreconditionFailed for disconnected or single-vertex
// graphs.
Extremes MeanZeroExtremes(const Graph& g);

struct PartExtremes {
  double m = 0.0;
  double M = 0.0;
  bool empty_part = false;  // empty parts contribute (0, 0)
};

struct BlockReport {
  Extremes whole;
  std::vector<PartExtremes> parts;
  double lhs = 0.0;  // (k - 1) m(T) + M(T)
  double rhs = 0.0;  // sum_i M(T_ii)
  bool parts_within_whole = true;  // m(T) <= m_i and M_i <= M(T), within tol
  bool holds = true;               // lhs <= rhs within tol
};

// Extremes of the adjacency operator compressed to each part of a partition.
// Throws kInvalidArgument unless the parts are disjoint and cover all
// vertices.
BlockReport BlockExtremes(const Graph& g,
                          const std::vector<VertexSubset>& partition);

// Spectrum of the 2n x 2n block operator [[0, T], [T, 0]].
Spectrum AntidiagonalSpectrum(const Graph& g);

struct SpectralBounds {
  double M = 0.0;
  double m = 0.0;
  double avg_deg = 0.0;
  int max_deg = 0;
  int min_deg = 0;
  int wilf = 1;                   // floor(M) + 1
  std::optional<int> hoffman;     // ceil(1 - M/m); absent without edges
  std::optional<double> gap;      // connected regular graphs only
  double mL = 0.0;                // lambda_2(L), 0 when n < 2
  double ML = 0.0;                // lambda_n(L)
  std::optional<double> independence_bound;  // regular with an edge: -m/(d-m)
  double mindeg_independence_bound = 1.0;    // 1 - min_deg / M(L)
};

SpectralBounds ComputeBounds(const Graph& g);

}  // namespace pmp

#endif  // PMP_SPECTRAL_H_
