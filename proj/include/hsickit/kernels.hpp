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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <variant>

#include <Eigen/Core>

namespace hsickit {

/// Sample points stored one per row. Row-major so that each point is a
/// contiguous run of doubles.
using PointSet = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> point(const PointSet& points, Eigen::Index i) {
  return {points.row(i).data(), static_cast<std::size_t>(points.cols())};
}

enum class KernelFamily { Gaussian, Laplace, Linear };

std::string to_string(KernelFamily family);

/// Bandwidth placeholder resolved from data by median_heuristic().
struct MedianHeuristic {
  bool operator==(const MedianHeuristic&) const = default;
};

/// A kernel family together with its bandwidth.
///
/// Gaussian:  k(x, y) = exp(-|x - y|_2^2 / (2 sigma^2))
/// Laplace:   k(x, y) = exp(-|x - y|_1 / sigma)
/// Linear:    k(x, y) = <x, y>   (no bandwidth)
///
/// Gaussian and Laplace are translation invariant, bounded and vanish at
/// infinity, and are characteristic on R^d. The linear kernel is none of
/// these and exists to show how a test fails without a characteristic kernel.
class KernelSpec {
 public:
  static KernelSpec gaussian(double bandwidth);
  static KernelSpec gaussian(MedianHeuristic);
  static KernelSpec laplace(double bandwidth);
  static KernelSpec laplace(MedianHeuristic);
  static KernelSpec linear();

  KernelFamily family() const noexcept { return family_; }
  bool claimed_characteristic() const noexcept { return family_ != KernelFamily::Linear; }

  /// False only while a median-heuristic bandwidth is still pending.
  bool is_resolved() const noexcept { return !std::holds_alternative<MedianHeuristic>(bandwidth_); }
  bool uses_median_heuristic() const noexcept { return !is_resolved(); }

  /// The explicit bandwidth, or nullopt for Linear and unresolved specs.
  std::optional<double> bandwidth() const noexcept;

  /// Replaces a pending median-heuristic bandwidth by the median pairwise
  /// distance of `points`. Resolved specs are returned unchanged.
  KernelSpec resolved_for(const PointSet& points) const;

  /// Flag form, e.g. "gaussian:median", "laplace:0.5", "linear".
  std::string to_string() const;

  bool operator==(const KernelSpec&) const = default;

 private:
  using Bandwidth = std::variant<std::monostate, double, MedianHeuristic>;
  KernelSpec(KernelFamily family, Bandwidth bandwidth) : family_(family), bandwidth_(bandwidth) {}

  KernelFamily family_;
  Bandwidth bandwidth_;
};

/// Evaluates k(x, y). Throws DimensionMismatch or UnresolvedBandwidth.
double kernel_eval(const KernelSpec& spec, std::span<const double> x, std::span<const double> y);

/// Median of the n(n-1)/2 Euclidean distances between distinct index pairs.
/// Zero distances stay in the pool; throws AllPointsIdentical only when every
/// distance is zero, and InsufficientSamples for fewer than two points.
double median_heuristic(const PointSet& points);

/// Symmetric matrix of pairwise kernel evaluations on one point set.
class GramMatrix {
 public:
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  Eigen::Index size() const noexcept { return entries_.rows(); }
  double operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  double max_abs_entry() const noexcept;
  /// 1e-8 * n * max|K_ij|: eigenvalues above -psd_tolerance() count as PSD.
  double psd_tolerance() const noexcept;
  /// 1e-10 * n * max|K_ij|: eigenvalues above it count as strictly positive.
  double spd_tolerance() const noexcept;

  double min_eigenvalue() const;

 private:
  friend GramMatrix gram(const KernelSpec&, const PointSet&);
  explicit GramMatrix(Eigen::MatrixXd entries) : entries_(std::move(entries)) {}

  Eigen::MatrixXd entries_;
};

/// K_ij = k(x_i, x_j). Only i <= j is evaluated; the lower triangle is a
/// mirror, so the result is exactly symmetric.
GramMatrix gram(const KernelSpec& spec, const PointSet& points);

struct PdDiagnostic {
  bool strictly_pd = false;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
  /// Unit-norm c with c^T K c = min_eigenvalue; present only when the Gram
  /// matrix is not strictly positive definite. Read as a signed measure on
  /// the support, its kernel embedding has (near) zero RKHS norm.
  std::optional<Eigen::VectorXd> witness;
};

/// Checks whether the kernel embeds every signed measure on `support`
/// injectively, i.e. whether the Gram matrix on the support is strictly
/// positive definite. Throws DuplicateSupportPoint on repeated points.
PdDiagnostic strict_pd_witness(const KernelSpec& spec, const PointSet& support);

}  // namespace hsickit
