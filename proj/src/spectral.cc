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

#include "pmp/spectral.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "pmp/error.h"

namespace pmp {
namespace {

void CheckOrder(int n) {
  if (n > kMaxDenseOrder) {
    Fail(ErrorCode::kCapExceeded,
         "dense eigensolve limited to n <= " + std::to_string(kMaxDenseOrder) +
             ", got " + std::to_string(n));
  }
}

Eigen::MatrixXd AdjacencyMatrix(const Graph& g) {
  const int n = g.order();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (int u = 0; u < n; ++u) {
    for (int v : g.neighbors(u)) a(u, v) = 1.0;
  }
  return a;
}

std::vector<double> SymmetricEigenvalues(const Eigen::MatrixXd& a) {
  if (a.rows() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    Fail(ErrorCode::kSearchExhausted, "symmetric eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double Scale(double x, double y) {
  return std::max({1.0, std::abs(x), std::abs(y)});
}

}  // namespace

bool ApproxEqual(double x, double y, double tol) {
  return std::abs(x - y) <= tol * Scale(x, y);
}

int FloorSnapped(double x, double tol) {
  return static_cast<int>(std::floor(x + tol));
}

int CeilSnapped(double x, double tol) {
  return static_cast<int>(std::ceil(x - tol));
}

Spectrum::Spectrum(std::vector<double> values, double tol)
    : values_(std::move(values)), tol_(tol) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::min() const {
  if (values_.empty()) Fail(ErrorCode::kInvalidArgument, "empty spectrum");
  return values_.front();
}

double Spectrum::max() const {
  if (values_.empty()) Fail(ErrorCode::kInvalidArgument, "empty spectrum");
  return values_.back();
}

bool Spectrum::Contains(double x) const { return Multiplicity(x) > 0; }

int Spectrum::Multiplicity(double x) const {
  int count = 0;
  for (double v : values_) {
    if (ApproxEqual(v, x, tol_)) ++count;
  }
  return count;
}

Spectrum Spectrum::Negated() const {
  std::vector<double> neg;
  neg.reserve(values_.size());
  for (double v : values_) neg.push_back(-v);
  return Spectrum(std::move(neg), tol_);
}

Spectrum Spectrum::Union(const Spectrum& other) const {
  std::vector<double> all = values_;
  all.insert(all.end(), other.values_.begin(), other.values_.end());
  return Spectrum(std::move(all), std::max(tol_, other.tol_));
}

bool Spectrum::ApproxEquals(const Spectrum& other) const {
  if (values_.size() != other.values_.size()) return false;
  const double tol = std::max(tol_, other.tol_);
  for (size_t i = 0; i < values_.size(); ++i) {
    if (!ApproxEqual(values_[i], other.values_[i], tol)) return false;
  }
  return true;
}

Spectrum AdjacencySpectrum(const Graph& g) {
  CheckOrder(g.order());
  return Spectrum(SymmetricEigenvalues(AdjacencyMatrix(g)));
}

Spectrum LaplacianSpectrum(const Graph& g) {
  CheckOrder(g.order());
  Eigen::MatrixXd l = -AdjacencyMatrix(g);
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
  return Spectrum(SymmetricEigenvalues(l));
}

Eigenpairs AdjacencyEigenpairs(const Graph& g) {
  CheckOrder(g.order());
  Eigenpairs out;
  if (g.order() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(AdjacencyMatrix(g));
  if (solver.info() != Eigen::Success) {
    Fail(ErrorCode::kSearchExhausted, "symmetric eigensolver did not converge");
  }
  const int n = g.order();
  for (int i = 0; i < n; ++i) {
    out.values.push_back(solver.eigenvalues()(i));
    std::vector<double> vec(n);
    for (int j = 0; j < n; ++j) vec[j] = solver.eigenvectors()(j, i);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

Extremes GetExtremes(const Spectrum& s) { return {s.min(), s.max()}; }

double SpectralGap(const Graph& g) {
  if (g.order() < 2 || !g.is_regular() || !IsConnected(g)) {
    Fail(ErrorCode::kPreconditionFailed,
         "spectral gap needs a connected regular graph on >= 2 vertices");
  }
  const double d = g.max_degree();
  const Spectrum s = AdjacencySpectrum(g);
  const auto& v = s.values();
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    if (*it < d && !ApproxEqual(*it, d, s.tol())) return d - *it;
  }
  Fail(ErrorCode::kPreconditionFailed, "no eigenvalue below the degree");
}

Extremes MeanZeroExtremes(const Graph& g) {
  if (g.order() < 2 || !IsConnected(g)) {
    Fail(ErrorCode::kPreconditionFailed,
         "mean-zero Laplacian extremes need a connected graph on >= 2 "
         "vertices");
  }
  // For connected graphs the Laplacian kernel is exactly the constants, so
  // the restriction to mean-zero functions keeps values[1..n-1].
  const Spectrum s = LaplacianSpectrum(g);
  return {s.values()[1], s.values().back()};
}

BlockReport BlockExtremes(const Graph& g,
                          const std::vector<VertexSubset>& partition) {
  const int n = g.order();
  VertexSubset covered(n);
  for (const auto& part : partition) {
    if (part.universe() != n) {
      Fail(ErrorCode::kInvalidArgument, "partition part over wrong universe");
    }
    if (part.Intersects(covered)) {
      Fail(ErrorCode::kInvalidArgument, "partition parts overlap");
    }
    covered |= part;
  }
  if (covered.count() != n) {
    Fail(ErrorCode::kInvalidArgument, "partition does not cover all vertices");
  }
  BlockReport report;
  report.whole = GetExtremes(AdjacencySpectrum(g));
  const double tol = kSpectralTol;
  for (const auto& part : partition) {
    PartExtremes pe;
    if (part.empty()) {
      pe.empty_part = true;
    } else {
      Extremes e = GetExtremes(AdjacencySpectrum(Induce(g, part).graph));
      pe.m = e.m;
      pe.M = e.M;
    }
    report.parts_within_whole =
        report.parts_within_whole &&
        pe.M <= report.whole.M + tol * Scale(pe.M, report.whole.M) &&
        pe.m >= report.whole.m - tol * Scale(pe.m, report.whole.m);
    report.rhs += pe.M;
    report.parts.push_back(pe);
  }
  const int k = static_cast<int>(partition.size());
  report.lhs = (k - 1) * report.whole.m + report.whole.M;
  report.holds = report.lhs <= report.rhs + tol * Scale(report.lhs, report.rhs);
  return report;
}

Spectrum AntidiagonalSpectrum(const Graph& g) {
  const int n = g.order();
  CheckOrder(2 * n);
  Eigen::MatrixXd block = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  Eigen::MatrixXd a = AdjacencyMatrix(g);
  block.topRightCorner(n, n) = a;
  block.bottomLeftCorner(n, n) = a;
  return Spectrum(SymmetricEigenvalues(block));
}

SpectralBounds ComputeBounds(const Graph& g) {
  if (g.order() == 0) {
    Fail(ErrorCode::kInvalidArgument, "bounds need at least one vertex");
  }
  SpectralBounds b;
  const Spectrum adj = AdjacencySpectrum(g);
  const Spectrum lap = LaplacianSpectrum(g);
  const DegreeStats stats = GetDegreeStats(g);
  b.M = adj.max();
  b.m = adj.min();
  b.avg_deg = stats.avg_deg;
  b.max_deg = stats.max_deg;
  b.min_deg = stats.min_deg;
  b.wilf = FloorSnapped(b.M) + 1;
  if (g.num_edges() > 0) b.hoffman = CeilSnapped(1.0 - b.M / b.m);
  b.ML = lap.max();
  b.mL = g.order() >= 2 ? lap.values()[1] : 0.0;
  const bool connected = IsConnected(g);
  if (g.order() >= 2 && g.is_regular() && connected) {
    const double d = g.max_degree();
    for (auto it = adj.values().rbegin(); it != adj.values().rend(); ++it) {
      if (*it < d && !ApproxEqual(*it, d)) {
        b.gap = d - *it;
        break;
      }
    }
  }
  if (g.is_regular() && g.max_degree() >= 1) {
    b.independence_bound = -b.m / (g.max_degree() - b.m);
  }
  if (b.ML > 0.0) b.mindeg_independence_bound = 1.0 - b.min_deg / b.ML;
  return b;
}

}  // namespace pmp
