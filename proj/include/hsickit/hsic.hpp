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

#include <span>

#include <Eigen/Core>

#include "hsickit/kernels.hpp"

namespace hsickit {

/// Paired samples (x_i, y_i). Both sides hold the same number of rows.
class Dataset {
 public:
  Dataset(PointSet x, PointSet y);

  const PointSet& x() const noexcept { return x_; }
  const PointSet& y() const noexcept { return y_; }
  Eigen::Index size() const noexcept { return x_.rows(); }

  /// Copy with y reindexed: y'_i = y_{perm[i]}. x is unchanged.
  Dataset with_y_permuted(std::span<const Eigen::Index> perm) const;

 private:
  PointSet x_;
  PointSet y_;
};

/// Finite joint pmf over labeled support points: pmf(i, j) is the mass of
/// (x_support row i, y_support row j).
class DiscreteJointDistribution {
 public:
  /// Throws InvalidDistribution for negative or non-normalised mass, a shape
  /// mismatch, or repeated support points on either side.
  DiscreteJointDistribution(PointSet x_support, PointSet y_support, Eigen::MatrixXd pmf);

  const PointSet& x_support() const noexcept { return x_support_; }
  const PointSet& y_support() const noexcept { return y_support_; }
  const Eigen::MatrixXd& pmf() const noexcept { return pmf_; }

  Eigen::VectorXd x_marginal() const { return pmf_.rowwise().sum(); }
  Eigen::VectorXd y_marginal() const { return pmf_.colwise().sum().transpose(); }

 private:
  PointSet x_support_;
  PointSet y_support_;
  Eigen::MatrixXd pmf_;
};

enum class HsicEstimator { BiasedV, PopulationExact };

struct HsicValue {
  /// raw clamped at zero when it is a roundoff-sized negative.
  double value = 0.0;
  double raw = 0.0;
  HsicEstimator estimator = HsicEstimator::BiasedV;
};

/// Signed measure P_XY - P_X P_Y on the support grid. Rows and columns each
/// sum to zero; it vanishes exactly when X and Y are independent.
Eigen::MatrixXd theta(const DiscreteJointDistribution& dist);

/// Exact squared Hilbert-Schmidt norm of the cross-covariance operator,
///
///   sum_{i,j,i',j'} theta_ij theta_i'j' kx(x_i, x_i') ky(y_j, y_j')
///     = tr(Kx Theta Ky Theta^T).
///
/// Both kernels must have resolved bandwidths.
HsicValue population_hsic(const DiscreteJointDistribution& dist, const KernelSpec& kx,
                          const KernelSpec& ky);

/// Biased (V-statistic) estimate (1/n^2) tr(K H L H), H = I - 11^T/n.
/// Median-heuristic bandwidths are resolved per side from that side's points.
/// Large samples go through a row-streaming evaluation that never stores the
/// n x n Gram matrices.
HsicValue hsic_biased(const Dataset& data, const KernelSpec& kx, const KernelSpec& ky);

/// Above this many samples hsic_biased switches to the streaming path.
inline constexpr Eigen::Index kDenseHsicLimit = 4096;

/// Same statistic as hsic_biased, computed in two passes over the kernel
/// values with O(n) memory (kernels are re-evaluated, not stored).
HsicValue hsic_biased_streaming(const Dataset& data, const KernelSpec& kx, const KernelSpec& ky);

/// (1/n^2) sum_ij Kc_ij Lc_{perm[i] perm[j]} for centered Gram matrices; an
/// empty perm means the identity. This is tr(K H L H) / n^2 with the y labels
/// relabeled by perm.
double centered_alignment(const Eigen::MatrixXd& kx_centered, const Eigen::MatrixXd& ky_centered,
                          std::span<const Eigen::Index> perm = {});

/// Double centering H K H. Row means are accumulated as offsets from the
/// first entry of the row, so a constant matrix centers to exactly zero.
Eigen::MatrixXd double_center(const Eigen::MatrixXd& gram);

/// Roundoff budget used to clamp a squared norm that came out slightly below
/// zero: 1e-12 * scale.
inline constexpr double kHsicClampRelTol = 1e-12;

/// Applies the clamp. Throws Numerical when raw < -kHsicClampRelTol * scale.
HsicValue make_hsic_value(double raw, double scale, HsicEstimator estimator);

}  // namespace hsickit
