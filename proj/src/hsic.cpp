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

#include "hsickit/hsic.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "hsickit/error.hpp"

namespace hsickit {
namespace {

void require_distinct_rows(const PointSet& support, const char* side) {
  for (Eigen::Index i = 0; i < support.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < support.rows(); ++j) {
      if (support.row(i) == support.row(j)) {
        std::ostringstream msg;
        msg << side << " support points " << i << " and " << j << " coincide";
        throw Error(Errc::DuplicateSupportPoint, msg.str());
      }
    }
  }
}

// Mean of values[0..n) accumulated as an offset from values[0]; exact when
// all values are equal.
template <typename Get>
double shifted_mean(Eigen::Index n, Get&& get) {
  const double anchor = get(0);
  double offset = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) offset += get(k) - anchor;
  return anchor + offset / static_cast<double>(n);
}

// Row means of the kernel matrix of `points`, evaluated without storing it.
Eigen::VectorXd streamed_row_means(const KernelSpec& spec, const PointSet& points) {
  const Eigen::Index n = points.rows();
  Eigen::VectorXd anchor(n);
  for (Eigen::Index i = 0; i < n; ++i) anchor(i) = kernel_eval(spec, point(points, i), point(points, 0));
  Eigen::VectorXd offset = Eigen::VectorXd::Zero(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    offset(i) += kernel_eval(spec, point(points, i), point(points, i)) - anchor(i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double value = kernel_eval(spec, point(points, i), point(points, j));
      offset(i) += value - anchor(i);
      offset(j) += value - anchor(j);
    }
  }
  return anchor + offset / static_cast<double>(n);
}

}  // namespace

Dataset::Dataset(PointSet x, PointSet y) : x_(std::move(x)), y_(std::move(y)) {
  if (x_.rows() != y_.rows()) {
    std::ostringstream msg;
    msg << "dataset sides differ in length (" << x_.rows() << " vs " << y_.rows() << ")";
    throw Error(Errc::DimensionMismatch, msg.str());
  }
  if (x_.rows() < 1) throw Error(Errc::InsufficientSamples, "dataset is empty");
  if (x_.cols() < 1 || y_.cols() < 1) {
    throw Error(Errc::DimensionMismatch, "dataset points must have at least one coordinate");
  }
}

Dataset Dataset::with_y_permuted(std::span<const Eigen::Index> perm) const {
  if (static_cast<Eigen::Index>(perm.size()) != size()) {
    throw Error(Errc::DimensionMismatch, "permutation length differs from dataset size");
  }
  PointSet y(y_.rows(), y_.cols());
  for (Eigen::Index i = 0; i < size(); ++i) y.row(i) = y_.row(perm[static_cast<std::size_t>(i)]);
  return {x_, std::move(y)};
}

DiscreteJointDistribution::DiscreteJointDistribution(PointSet x_support, PointSet y_support,
                                                     Eigen::MatrixXd pmf)
    : x_support_(std::move(x_support)), y_support_(std::move(y_support)), pmf_(std::move(pmf)) {
  if (pmf_.rows() != x_support_.rows() || pmf_.cols() != y_support_.rows() || pmf_.size() == 0) {
    throw Error(Errc::InvalidDistribution, "pmf shape must be |x_support| x |y_support|");
  }
  if (!pmf_.allFinite() || (pmf_.array() < 0.0).any()) {
    throw Error(Errc::InvalidDistribution, "pmf entries must be finite and non-negative");
  }
  if (std::abs(pmf_.sum() - 1.0) > 1e-12) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "pmf must sum to 1, sums to " << pmf_.sum();
    throw Error(Errc::InvalidDistribution, msg.str());
  }
  require_distinct_rows(x_support_, "x");
  require_distinct_rows(y_support_, "y");
}

Eigen::MatrixXd theta(const DiscreteJointDistribution& dist) {
  return dist.pmf() - dist.x_marginal() * dist.y_marginal().transpose();
}

HsicValue make_hsic_value(double raw, double scale, HsicEstimator estimator) {
  HsicValue result{raw, raw, estimator};
  if (raw < 0.0) {
    if (raw < -kHsicClampRelTol * scale) {
      std::ostringstream msg;
      msg << "squared HSIC norm is negative beyond roundoff (" << raw << ", scale " << scale
          << "); is the kernel positive semidefinite?";
      throw Error(Errc::Numerical, msg.str());
    }
    result.value = 0.0;
  }
  return result;
}

HsicValue population_hsic(const DiscreteJointDistribution& dist, const KernelSpec& kx,
                          const KernelSpec& ky) {
  const Eigen::MatrixXd kxx = gram(kx, dist.x_support()).entries();
  const Eigen::MatrixXd kyy = gram(ky, dist.y_support()).entries();
  const Eigen::MatrixXd th = theta(dist);

  // tr(Kx Theta Ky Theta^T) = sum of (Kx Theta Ky) .* Theta
  const double raw = (kxx * th * kyy).cwiseProduct(th).sum();
  const double mass = th.cwiseAbs().sum();
  const double scale = kxx.cwiseAbs().maxCoeff() * kyy.cwiseAbs().maxCoeff() * mass * mass;
  return make_hsic_value(raw, scale, HsicEstimator::PopulationExact);
}

Eigen::MatrixXd double_center(const Eigen::MatrixXd& gram) {
  const Eigen::Index n = gram.rows();
  Eigen::VectorXd row_mean(n);
  Eigen::VectorXd col_mean(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    row_mean(i) = shifted_mean(n, [&](Eigen::Index j) { return gram(i, j); });
    col_mean(i) = shifted_mean(n, [&](Eigen::Index j) { return gram(j, i); });
  }
  const double grand = shifted_mean(n, [&](Eigen::Index i) { return row_mean(i); });

  Eigen::MatrixXd centered(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) {
      centered(i, j) = (gram(i, j) - row_mean(i)) - (col_mean(j) - grand);
    }
  }
  return centered;
}

double centered_alignment(const Eigen::MatrixXd& kx_centered, const Eigen::MatrixXd& ky_centered,
                          std::span<const Eigen::Index> perm) {
  const Eigen::Index n = kx_centered.rows();
  double sum = 0.0;
  if (perm.empty()) {
    for (Eigen::Index j = 0; j < n; ++j) {
      for (Eigen::Index i = 0; i < n; ++i) sum += kx_centered(i, j) * ky_centered(i, j);
    }
  } else {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double* column = ky_centered.col(perm[static_cast<std::size_t>(j)]).data();
      for (Eigen::Index i = 0; i < n; ++i) {
        sum += kx_centered(i, j) * column[perm[static_cast<std::size_t>(i)]];
      }
    }
  }
  const double nn = static_cast<double>(n);
  return sum / (nn * nn);
}

HsicValue hsic_biased(const Dataset& data, const KernelSpec& kx, const KernelSpec& ky) {
  const Eigen::Index n = data.size();
  if (n < 2) throw Error(Errc::InsufficientSamples, "HSIC needs at least two samples");
  if (n > kDenseHsicLimit) return hsic_biased_streaming(data, kx, ky);

  const KernelSpec kx_resolved = kx.resolved_for(data.x());
  const KernelSpec ky_resolved = ky.resolved_for(data.y());
  const Eigen::MatrixXd kc = double_center(gram(kx_resolved, data.x()).entries());
  const Eigen::MatrixXd lc = double_center(gram(ky_resolved, data.y()).entries());
  const double nn = static_cast<double>(n);
  return make_hsic_value(centered_alignment(kc, lc), kc.norm() * lc.norm() / (nn * nn),
                         HsicEstimator::BiasedV);
}

HsicValue hsic_biased_streaming(const Dataset& data, const KernelSpec& kx, const KernelSpec& ky) {
  const Eigen::Index n = data.size();
  if (n < 2) throw Error(Errc::InsufficientSamples, "HSIC needs at least two samples");
  const KernelSpec kx_resolved = kx.resolved_for(data.x());
  const KernelSpec ky_resolved = ky.resolved_for(data.y());
  const PointSet& x = data.x();
  const PointSet& y = data.y();

  const Eigen::VectorXd kx_mean = streamed_row_means(kx_resolved, x);
  const Eigen::VectorXd ky_mean = streamed_row_means(ky_resolved, y);
  const double kx_grand = shifted_mean(n, [&](Eigen::Index i) { return kx_mean(i); });
  const double ky_grand = shifted_mean(n, [&](Eigen::Index i) { return ky_mean(i); });

  double diagonal = 0.0, off_diagonal = 0.0;
  double kx_sq = 0.0, ky_sq = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) {
      const double a = (kernel_eval(kx_resolved, point(x, i), point(x, j)) - kx_mean(i)) -
                       (kx_mean(j) - kx_grand);
      const double b = (kernel_eval(ky_resolved, point(y, i), point(y, j)) - ky_mean(i)) -
                       (ky_mean(j) - ky_grand);
      const double weight = i == j ? 1.0 : 2.0;
      (i == j ? diagonal : off_diagonal) += a * b;
      kx_sq += weight * a * a;
      ky_sq += weight * b * b;
    }
  }
  const double nn = static_cast<double>(n);
  const double raw = (diagonal + 2.0 * off_diagonal) / (nn * nn);
  return make_hsic_value(raw, std::sqrt(kx_sq) * std::sqrt(ky_sq) / (nn * nn),
                         HsicEstimator::BiasedV);
}

}  // namespace hsickit
