// Copyright 2026 The hsickit Authors.
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

#include "hsickit/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hsickit/error.hpp"

namespace hsickit {
namespace {

double checked_bandwidth(double bandwidth) {
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) {
    std::ostringstream msg;
    msg << "kernel bandwidth must be positive and finite, got " << bandwidth;
    throw Error(Errc::InvalidArgument, msg.str());
  }
  return bandwidth;
}

}  // namespace

std::string to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::Gaussian: return "gaussian";
    case KernelFamily::Laplace: return "laplace";
    case KernelFamily::Linear: return "linear";
  }
  return "unknown";
}

KernelSpec KernelSpec::gaussian(double bandwidth) {
  return {KernelFamily::Gaussian, checked_bandwidth(bandwidth)};
}
KernelSpec KernelSpec::gaussian(MedianHeuristic) { return {KernelFamily::Gaussian, MedianHeuristic{}}; }
KernelSpec KernelSpec::laplace(double bandwidth) {
  return {KernelFamily::Laplace, checked_bandwidth(bandwidth)};
}
KernelSpec KernelSpec::laplace(MedianHeuristic) { return {KernelFamily::Laplace, MedianHeuristic{}}; }
KernelSpec KernelSpec::linear() { return {KernelFamily::Linear, std::monostate{}}; }

std::optional<double> KernelSpec::bandwidth() const noexcept {
  if (const auto* value = std::get_if<double>(&bandwidth_)) return *value;
  return std::nullopt;
}

KernelSpec KernelSpec::resolved_for(const PointSet& points) const {
  if (is_resolved()) return *this;
  return {family_, median_heuristic(points)};
}

std::string KernelSpec::to_string() const {
  std::ostringstream out;
  out << hsickit::to_string(family_);
  if (uses_median_heuristic()) {
    out << ":median";
  } else if (const auto value = bandwidth()) {
    out.precision(17);
    out << ':' << *value;
  }
  return out.str();
}

double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    std::ostringstream msg;
    msg << "kernel arguments differ in dimension (" << x.size() << " vs " << y.size() << ")";
    throw Error(Errc::DimensionMismatch, msg.str());
  }
  switch (spec.family()) {
    case KernelFamily::Linear: {
      double dot = 0.0;
      for (std::size_t d = 0; d < x.size(); ++d) dot += x[d] * y[d];
      return dot;
    }
    case KernelFamily::Gaussian:
    case KernelFamily::Laplace:
      break;
  }
  const auto sigma = spec.bandwidth();
  if (!sigma) {
    throw Error(Errc::UnresolvedBandwidth,
                "median-heuristic bandwidth must be resolved before evaluating " + spec.to_string());
  }
  if (spec.family() == KernelFamily::Gaussian) {
    double sq = 0.0;
    for (std::size_t d = 0; d < x.size(); ++d) {
      const double diff = x[d] - y[d];
      sq += diff * diff;
    }
    return std::exp(-sq / (2.0 * *sigma * *sigma));
  }
  double l1 = 0.0;
  for (std::size_t d = 0; d < x.size(); ++d) l1 += std::abs(x[d] - y[d]);
  return std::exp(-l1 / *sigma);
}

double median_heuristic(const PointSet& points) {
  const Eigen::Index n = points.rows();
  if (n < 2) {
    throw Error(Errc::InsufficientSamples, "median heuristic needs at least two points");
  }
  std::vector<double> distances;
  distances.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      distances.push_back((points.row(i) - points.row(j)).norm());
    }
  }
  if (*std::max_element(distances.begin(), distances.end()) == 0.0) {
    throw Error(Errc::AllPointsIdentical, "median heuristic: all points are identical");
  }

  const std::size_t mid = distances.size() / 2;
  std::nth_element(distances.begin(), distances.begin() + mid, distances.end());
  const double upper = distances[mid];
  if (distances.size() % 2 == 1) return upper;
  const double lower = *std::max_element(distances.begin(), distances.begin() + mid);
  const double median = 0.5 * (lower + upper);
  // More than half of the pool can be zero (heavy ties); a zero median is
  // not a usable bandwidth.
  if (median == 0.0) {
    throw Error(Errc::InvalidArgument,
                "median heuristic: median pairwise distance is zero (too many repeated points)");
  }
  return median;
}

double GramMatrix::max_abs_entry() const noexcept {
  return entries_.size() == 0 ? 0.0 : entries_.cwiseAbs().maxCoeff();
}

double GramMatrix::psd_tolerance() const noexcept {
  return 1e-8 * static_cast<double>(size()) * max_abs_entry();
}

double GramMatrix::spd_tolerance() const noexcept {
  return 1e-10 * static_cast<double>(size()) * max_abs_entry();
}

double GramMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(entries_, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::Numerical, "eigenvalue decomposition of Gram matrix did not converge");
  }
  return solver.eigenvalues()(0);
}

GramMatrix gram(const KernelSpec& spec, const PointSet& points) {
  const Eigen::Index n = points.rows();
  if (n < 1) throw Error(Errc::InsufficientSamples, "Gram matrix needs at least one point");
  Eigen::MatrixXd entries(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double value = kernel_eval(spec, point(points, i), point(points, j));
      entries(i, j) = value;
      entries(j, i) = value;
    }
  }
  return GramMatrix(std::move(entries));
}

PdDiagnostic strict_pd_witness(const KernelSpec& spec, const PointSet& support) {
  const Eigen::Index n = support.rows();
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (support.row(i) == support.row(j)) {
        std::ostringstream msg;
        msg << "support points " << i << " and " << j << " coincide";
        throw Error(Errc::DuplicateSupportPoint, msg.str());
      }
    }
  }

  const GramMatrix k = gram(spec, support);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(k.entries());
  if (solver.info() != Eigen::Success) {
    throw Error(Errc::Numerical, "eigenvalue decomposition of Gram matrix did not converge");
  }

  PdDiagnostic result;
  result.min_eigenvalue = solver.eigenvalues()(0);
  result.tolerance = k.spd_tolerance();
  result.strictly_pd = result.min_eigenvalue > result.tolerance;
  if (!result.strictly_pd) result.witness = solver.eigenvectors().col(0).normalized();
  return result;
}

}  // namespace hsickit
