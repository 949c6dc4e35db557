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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "hsickit/datagen.hpp"
#include "hsickit/error.hpp"
#include "oracles.hpp"

namespace hsickit {
namespace {

double mean(const PointSet& p) { return p.col(0).mean(); }

double covariance(const PointSet& a, const PointSet& b) {
  return ((a.col(0).array() - mean(a)) * (b.col(0).array() - mean(b))).mean();
}

TEST(Sample, RingLiesOnCircle) {
  const Dataset data = sample(GeneratorSpec{RingUniform{1.0, 0.0}, 7}, 1000);
  ASSERT_EQ(data.x().cols(), 1);
  ASSERT_EQ(data.y().cols(), 1);
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    EXPECT_NEAR(data.x()(i, 0) * data.x()(i, 0) + data.y()(i, 0) * data.y()(i, 0), 1.0, 1e-12);
  }
  const Dataset wide = sample(GeneratorSpec{RingUniform{2.5, 0.0}, 7}, 50);
  EXPECT_NEAR(wide.x().col(0).cwiseAbs2().sum() + wide.y().col(0).cwiseAbs2().sum(), 50 * 6.25, 1e-9);
}

TEST(Sample, RingIsUncorrelatedButDependent) {
  const Eigen::Index n = 10000;
  const Dataset data = sample(GeneratorSpec{RingUniform{1.0, 0.0}, 11}, n);
  const double bound = 3.0 / std::sqrt(static_cast<double>(n));
  EXPECT_LT(std::abs(mean(data.x())), bound);
  EXPECT_LT(std::abs(mean(data.y())), bound);
  EXPECT_LT(std::abs(covariance(data.x(), data.y())), bound);
  const double corr = covariance(data.x(), data.y()) /
                      std::sqrt(covariance(data.x(), data.x()) * covariance(data.y(), data.y()));
  EXPECT_LT(std::abs(corr), bound);
  // x^2 + y^2 is constant, so x^2 and y^2 are perfectly anti-correlated
  const PointSet x2 = data.x().cwiseAbs2();
  const PointSet y2 = data.y().cwiseAbs2();
  EXPECT_NEAR(covariance(x2, y2) / std::sqrt(covariance(x2, x2) * covariance(y2, y2)), -1.0, 1e-9);
}

TEST(Sample, RingNoiseMovesPointsOffCircle) {
  const Dataset data = sample(GeneratorSpec{RingUniform{1.0, 0.1}, 3}, 500);
  double spread = 0.0;
  for (Eigen::Index i = 0; i < data.size(); ++i) {
    spread += std::abs(std::hypot(data.x()(i, 0), data.y()(i, 0)) - 1.0);
  }
  EXPECT_GT(spread / 500.0, 0.02);
}

TEST(Sample, Deterministic) {
  for (const GeneratorSpec& spec :
       {GeneratorSpec{RingUniform{1.0, 0.2}, 5}, GeneratorSpec{IndependentGaussian{2, 3}, 5},
        GeneratorSpec{Rotated{1.0}, 5}}) {
    const Dataset a = sample(spec, 64);
    const Dataset b = sample(spec, 64);
    EXPECT_EQ(a.x(), b.x());
    EXPECT_EQ(a.y(), b.y());
  }
  EXPECT_NE(sample(GeneratorSpec{RingUniform{}, 1}, 8).x(), sample(GeneratorSpec{RingUniform{}, 2}, 8).x());
}

TEST(Sample, IndependentGaussianShapesAndMoments) {
  const Dataset data = sample(GeneratorSpec{IndependentGaussian{2, 3}, 9}, 20000);
  EXPECT_EQ(data.x().cols(), 2);
  EXPECT_EQ(data.y().cols(), 3);
  EXPECT_LT(data.x().colwise().mean().cwiseAbs().maxCoeff(), 0.05);
  const Eigen::RowVectorXd var = data.y().cwiseAbs2().colwise().mean();
  EXPECT_LT((var.array() - 1.0).abs().maxCoeff(), 0.05);
}

TEST(Sample, RotationByZeroIsTheIndependentPair) {
  const Dataset data = sample(GeneratorSpec{Rotated{0.0}, 4}, 200);
  // same sources, drawn in the same order, for any angle
  const Dataset turned = sample(GeneratorSpec{Rotated{std::numbers::pi / 2}, 4}, 200);
  EXPECT_LT((turned.x() + data.y()).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_LT((turned.y() - data.x()).cwiseAbs().maxCoeff(), 1e-12);
  const double half_width = std::sqrt(3.0);
  EXPECT_LE(data.x().cwiseAbs().maxCoeff(), half_width);
  EXPECT_LE(data.y().cwiseAbs().maxCoeff(), half_width);
}

TEST(Sample, DiscreteGivenConvergesToPmf) {
  Eigen::MatrixXd pmf(3, 4);
  pmf << 0.1, 0.0, 0.05, 0.15, 0.2, 0.05, 0.05, 0.0, 0.1, 0.1, 0.1, 0.1;
  const DiscreteJointDistribution dist(symmetric_integer_support(3), symmetric_integer_support(4), pmf);
  const Eigen::Index n = 10000;
  const Dataset data = sample(GeneratorSpec{DiscreteGiven{dist}, 12}, n);
  Eigen::MatrixXd empirical = Eigen::MatrixXd::Zero(3, 4);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index i = 0, j = 0;
    while (dist.x_support()(i, 0) != data.x()(k, 0)) ++i;
    while (dist.y_support()(j, 0) != data.y()(k, 0)) ++j;
    empirical(i, j) += 1.0 / static_cast<double>(n);
  }
  EXPECT_LE((empirical - pmf).cwiseAbs().maxCoeff(), 0.05);
  EXPECT_EQ(empirical(0, 1), 0.0);
}

TEST(Sample, InvalidParameters) {
  EXPECT_THROW(sample(GeneratorSpec{RingUniform{0.0, 0.0}, 1}, 10), Error);
  EXPECT_THROW(sample(GeneratorSpec{RingUniform{1.0, -0.1}, 1}, 10), Error);
  EXPECT_THROW(sample(GeneratorSpec{Rotated{2.0 * std::numbers::pi}, 1}, 10), Error);
  EXPECT_THROW(sample(GeneratorSpec{Rotated{-0.1}, 1}, 10), Error);
  EXPECT_THROW(sample(GeneratorSpec{IndependentGaussian{0, 1}, 1}, 10), Error);
  EXPECT_THROW(sample(GeneratorSpec{RingUniform{}, 1}, 0), Error);
}

TEST(SymmetricIntegerSupport, Shapes) {
  EXPECT_EQ(symmetric_integer_support(1)(0, 0), 0.0);
  EXPECT_EQ(symmetric_integer_support(2).col(0), Eigen::Vector2d(-1, 1));
  EXPECT_EQ(symmetric_integer_support(3).col(0), Eigen::Vector3d(-1, 0, 1));
  EXPECT_EQ(symmetric_integer_support(4).col(0), Eigen::Vector4d(-2, -1, 1, 2));
}

std::vector<DiscreteJointDistribution> drain(DiscreteGridEnumerator grid) {
  std::vector<DiscreteJointDistribution> out;
  while (auto d = grid.next()) out.push_back(std::move(*d));
  return out;
}

TEST(DiscreteGridEnumerator, CountMatchesBruteForce) {
  EXPECT_EQ(oracle::brute_force_composition_count(4, 2), 10u);
  EXPECT_EQ(drain(DiscreteGridEnumerator(2, 2, 2, false)).size(), 10u);
  for (auto [mx, my, r] : {std::tuple{2, 2, 4}, {1, 3, 5}, {2, 3, 3}, {3, 3, 2}, {1, 1, 7}}) {
    EXPECT_EQ(drain(DiscreteGridEnumerator(mx, my, r, false)).size(),
              oracle::brute_force_composition_count(mx * my, r))
        << mx << "x" << my << " r=" << r;
  }
}

TEST(DiscreteGridEnumerator, ResolutionTwoYieldsHalfIntegerPmfs) {
  std::set<std::vector<double>> seen;
  for (const auto& d : drain(DiscreteGridEnumerator(2, 2, 2, false))) {
    std::vector<double> cells(d.pmf().data(), d.pmf().data() + 4);
    for (double c : cells) EXPECT_TRUE(c == 0.0 || c == 0.5 || c == 1.0);
    EXPECT_EQ(d.pmf().sum(), 1.0);
    seen.insert(cells);
  }
  EXPECT_EQ(seen.size(), 10u);
}

TEST(DiscreteGridEnumerator, IncludesDiagonalPmf) {
  Eigen::Matrix2d diag;
  diag << 0.5, 0.0, 0.0, 0.5;
  bool found = false;
  for (const auto& d : drain(DiscreteGridEnumerator(2, 2, 4, false))) found = found || d.pmf() == diag;
  EXPECT_TRUE(found);
}

TEST(DiscreteGridEnumerator, DependentFilter) {
  const auto all = drain(DiscreteGridEnumerator(2, 3, 4, false));
  const auto dependent = drain(DiscreteGridEnumerator(2, 3, 4, true));
  EXPECT_LT(dependent.size(), all.size());
  for (const auto& d : dependent) EXPECT_GE(theta(d).cwiseAbs().maxCoeff(), 1e-12);
  std::size_t independent = 0;
  for (const auto& d : all) independent += theta(d).cwiseAbs().maxCoeff() < 1e-12;
  EXPECT_EQ(all.size() - independent, dependent.size());
}

TEST(DiscreteGridEnumerator, InvalidArguments) {
  EXPECT_THROW(DiscreteGridEnumerator(5, 2, 4, false), Error);
  EXPECT_THROW(DiscreteGridEnumerator(2, 0, 4, false), Error);
  EXPECT_THROW(DiscreteGridEnumerator(2, 2, 1, false), Error);
}

}  // namespace
}  // namespace hsickit
