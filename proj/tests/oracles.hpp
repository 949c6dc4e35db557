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

// Brute-force reference computations for the test suites. Nothing here calls
// into the estimators under test; kernels are re-derived from their closed
// forms and centering is done with an explicit H matrix.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "hsickit/kernels.hpp"

namespace hsickit::oracle {

inline double kernel(KernelFamily family, double bandwidth, const Eigen::RowVectorXd& a,
                     const Eigen::RowVectorXd& b) {
  switch (family) {
    case KernelFamily::Gaussian:
      return std::exp(-(a - b).squaredNorm() / (2.0 * bandwidth * bandwidth));
    case KernelFamily::Laplace:
      return std::exp(-(a - b).lpNorm<1>() / bandwidth);
    case KernelFamily::Linear:
      return a.dot(b);
  }
  return 0.0;
}

inline Eigen::MatrixXd gram(KernelFamily family, double bandwidth, const PointSet& points) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd k(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) k(i, j) = kernel(family, bandwidth, points.row(i), points.row(j));
  }
  return k;
}

inline Eigen::MatrixXd centering(Eigen::Index n) {
  return Eigen::MatrixXd::Identity(n, n) -
         Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n));
}

/// (1/n^2) tr(K H L H) by explicit matrix products.
inline double trace_hsic(const Eigen::MatrixXd& k, const Eigen::MatrixXd& l) {
  const Eigen::Index n = k.rows();
  const Eigen::MatrixXd h = centering(n);
  return (k * h * l * h).trace() / static_cast<double>(n * n);
}

/// (1/n^2) sum_ij (HKH)_ij (HLH)_ij by explicit loops.
inline double centered_double_sum_hsic(const Eigen::MatrixXd& k, const Eigen::MatrixXd& l) {
  const Eigen::Index n = k.rows();
  const Eigen::MatrixXd h = centering(n);
  const Eigen::MatrixXd kc = h * k * h;
  const Eigen::MatrixXd lc = h * l * h;
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) sum += kc(i, j) * lc(i, j);
  }
  return sum / static_cast<double>(n * n);
}

/// sum_{i,j,i',j'} theta_ij theta_i'j' kx(x_i, x_i') ky(y_j, y_j') with theta
/// rebuilt from the pmf by loops.
inline double quadruple_sum_hsic(const Eigen::MatrixXd& pmf, const Eigen::MatrixXd& kx,
                                 const Eigen::MatrixXd& ky) {
  const Eigen::Index mx = pmf.rows(), my = pmf.cols();
  std::vector<double> px(static_cast<std::size_t>(mx), 0.0), py(static_cast<std::size_t>(my), 0.0);
  for (Eigen::Index i = 0; i < mx; ++i) {
    for (Eigen::Index j = 0; j < my; ++j) {
      px[static_cast<std::size_t>(i)] += pmf(i, j);
      py[static_cast<std::size_t>(j)] += pmf(i, j);
    }
  }
  const auto th = [&](Eigen::Index i, Eigen::Index j) {
    return pmf(i, j) - px[static_cast<std::size_t>(i)] * py[static_cast<std::size_t>(j)];
  };
  double sum = 0.0;
  for (Eigen::Index i = 0; i < mx; ++i)
    for (Eigen::Index j = 0; j < my; ++j)
      for (Eigen::Index a = 0; a < mx; ++a)
        for (Eigen::Index b = 0; b < my; ++b) sum += th(i, j) * th(a, b) * kx(i, a) * ky(j, b);
  return sum;
}

/// Exact permutation p-value #{pi : T_pi >= T0} / n! where each T_pi is the
/// trace statistic recomputed from scratch on the relabeled y Gram matrix.
inline double exhaustive_p_value(const Eigen::MatrixXd& k, const Eigen::MatrixXd& l) {
  const Eigen::Index n = k.rows();
  const double observed = trace_hsic(k, l);
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Eigen::Index{0});
  std::size_t exceed = 0, total = 0;
  // Permutations that leave the statistic unchanged must count; allow for
  // the different summation order.
  const double tol = 1e-10 * (k.norm() * l.norm()) / static_cast<double>(n * n);
  do {
    Eigen::MatrixXd lp(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        lp(i, j) = l(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
    if (trace_hsic(k, lp) >= observed - tol) ++exceed;
    ++total;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<double>(exceed) / static_cast<double>(total);
}

/// Number of vectors in {0..r}^cells summing to r, by direct enumeration.
inline std::size_t brute_force_composition_count(int cells, int r) {
  std::vector<int> v(static_cast<std::size_t>(cells), 0);
  std::size_t count = 0;
  while (true) {
    if (std::accumulate(v.begin(), v.end(), 0) == r) ++count;
    std::size_t k = 0;
    while (k < v.size() && v[k] == r) v[k++] = 0;
    if (k == v.size()) break;
    ++v[k];
  }
  return count;
}

/// Points in [-5, 5]^d, pairwise at least `separation` apart.
inline PointSet separated_points(std::mt19937_64& rng, Eigen::Index n, Eigen::Index d,
                                 double separation) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  PointSet points(n, d);
  Eigen::Index filled = 0;
  while (filled < n) {
    Eigen::RowVectorXd candidate(d);
    for (Eigen::Index c = 0; c < d; ++c) candidate(c) = u(rng);
    bool ok = true;
    for (Eigen::Index i = 0; i < filled && ok; ++i) ok = (points.row(i) - candidate).norm() >= separation;
    if (ok) points.row(filled++) = candidate;
  }
  return points;
}

inline PointSet random_points(std::mt19937_64& rng, Eigen::Index n, Eigen::Index d) {
  std::normal_distribution<double> g;
  PointSet points(n, d);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index c = 0; c < d; ++c) points(i, c) = g(rng);
  return points;
}

/// Random pmf of shape mx x my with a few zero cells mixed in.
inline Eigen::MatrixXd random_pmf(std::mt19937_64& rng, Eigen::Index mx, Eigen::Index my) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Eigen::MatrixXd pmf(mx, my);
  for (Eigen::Index i = 0; i < mx; ++i)
    for (Eigen::Index j = 0; j < my; ++j) pmf(i, j) = u(rng) < 0.2 ? 0.0 : u(rng);
  if (pmf.sum() == 0.0) pmf(0, 0) = 1.0;
  return pmf / pmf.sum();
}

}  // namespace hsickit::oracle
