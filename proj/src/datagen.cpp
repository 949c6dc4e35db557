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

#include "hsickit/datagen.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "hsickit/error.hpp"
#include "hsickit/rng.hpp"

namespace hsickit {
namespace {

template <typename... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Dataset sample_ring(const RingUniform& p, Eigen::Index n, SplitMix64& engine) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::normal_distribution<double> gauss;
  PointSet x(n, 1), y(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = angle(engine);
    x(i, 0) = p.radius * std::cos(t);
    y(i, 0) = p.radius * std::sin(t);
    if (p.noise > 0.0) {
      x(i, 0) += p.noise * gauss(engine);
      y(i, 0) += p.noise * gauss(engine);
    }
  }
  return {std::move(x), std::move(y)};
}

Dataset sample_gaussian(const IndependentGaussian& p, Eigen::Index n, SplitMix64& engine) {
  std::normal_distribution<double> gauss;
  PointSet x(n, p.dim_x), y(n, p.dim_y);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index d = 0; d < p.dim_x; ++d) x(i, d) = gauss(engine);
    for (Eigen::Index d = 0; d < p.dim_y; ++d) y(i, d) = gauss(engine);
  }
  return {std::move(x), std::move(y)};
}

Dataset sample_rotated(const Rotated& p, Eigen::Index n, SplitMix64& engine) {
  const double half_width = std::sqrt(3.0);
  std::uniform_real_distribution<double> source(-half_width, half_width);
  const double c = std::cos(p.angle);
  const double s = std::sin(p.angle);
  PointSet x(n, 1), y(n, 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double s1 = source(engine);
    const double s2 = source(engine);
    x(i, 0) = c * s1 - s * s2;
    y(i, 0) = s * s1 + c * s2;
  }
  return {std::move(x), std::move(y)};
}

Dataset sample_discrete(const DiscreteGiven& p, Eigen::Index n, SplitMix64& engine) {
  const auto& dist = p.distribution;
  const Eigen::Index my = dist.pmf().cols();
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(dist.pmf().size()));
  for (Eigen::Index i = 0; i < dist.pmf().rows(); ++i) {
    for (Eigen::Index j = 0; j < my; ++j) weights.push_back(dist.pmf()(i, j));
  }
  std::discrete_distribution<Eigen::Index> cell(weights.begin(), weights.end());
  PointSet x(n, dist.x_support().cols()), y(n, dist.y_support().cols());
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index c = cell(engine);
    x.row(k) = dist.x_support().row(c / my);
    y.row(k) = dist.y_support().row(c % my);
  }
  return {std::move(x), std::move(y)};
}

void invalid(const std::string& what) { throw Error(Errc::InvalidArgument, what); }

}  // namespace

std::string to_string(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::RingUniform: return "ring";
    case GeneratorKind::IndependentGaussian: return "independent-gaussian";
    case GeneratorKind::Rotated: return "rotated";
    case GeneratorKind::DiscreteGiven: return "discrete";
  }
  return "unknown";
}

GeneratorKind GeneratorSpec::kind() const noexcept {
  return static_cast<GeneratorKind>(params.index());
}

void GeneratorSpec::validate() const {
  std::visit(Overloaded{
                 [](const RingUniform& p) {
                   if (!(p.radius > 0.0) || !std::isfinite(p.radius)) invalid("ring radius must be positive");
                   if (!(p.noise >= 0.0) || !std::isfinite(p.noise)) invalid("ring noise must be non-negative");
                 },
                 [](const IndependentGaussian& p) {
                   if (p.dim_x < 1 || p.dim_y < 1) invalid("gaussian dimensions must be at least 1");
                 },
                 [](const Rotated& p) {
                   if (!(p.angle >= 0.0 && p.angle < 2.0 * std::numbers::pi)) {
                     invalid("rotation angle must lie in [0, 2 pi)");
                   }
                 },
                 [](const DiscreteGiven&) {},
             },
             params);
}

Dataset sample(const GeneratorSpec& spec, Eigen::Index n) {
  spec.validate();
  if (n < 1) invalid("sample size must be at least 1");
  SplitMix64 engine(derive_seed(spec.seed, 0));
  return std::visit(Overloaded{
                        [&](const RingUniform& p) { return sample_ring(p, n, engine); },
                        [&](const IndependentGaussian& p) { return sample_gaussian(p, n, engine); },
                        [&](const Rotated& p) { return sample_rotated(p, n, engine); },
                        [&](const DiscreteGiven& p) { return sample_discrete(p, n, engine); },
                    },
                    spec.params);
}

PointSet symmetric_integer_support(Eigen::Index m) {
  if (m < 1) invalid("support size must be at least 1");
  PointSet support(m, 1);
  if (m % 2 == 1) {
    for (Eigen::Index i = 0; i < m; ++i) support(i, 0) = static_cast<double>(i - (m - 1) / 2);
  } else {
    const Eigen::Index half = m / 2;
    for (Eigen::Index i = 0; i < half; ++i) {
      support(i, 0) = static_cast<double>(i - half);
      support(half + i, 0) = static_cast<double>(i + 1);
    }
  }
  return support;
}

DiscreteGridEnumerator::DiscreteGridEnumerator(Eigen::Index m_x, Eigen::Index m_y, int resolution,
                                               bool dependent_only)
    : m_x_(m_x), m_y_(m_y), resolution_(resolution), dependent_only_(dependent_only) {
  if (m_x < 1 || m_x > 4 || m_y < 1 || m_y > 4) {
    std::ostringstream msg;
    msg << "support sizes must lie in [1, 4], got " << m_x << " x " << m_y;
    invalid(msg.str());
  }
  if (resolution < 2) invalid("grid resolution must be at least 2");
  x_support_ = symmetric_integer_support(m_x);
  y_support_ = symmetric_integer_support(m_y);
  counts_.assign(static_cast<std::size_t>(m_x * m_y), 0);
  counts_.back() = resolution;
}

// Next composition of `resolution` into counts_.size() parts in lexicographic
// order; false after (resolution, 0, ..., 0).
bool DiscreteGridEnumerator::advance() {
  std::size_t last = counts_.size();
  while (last > 0 && counts_[last - 1] == 0) --last;
  const std::size_t last_nonzero = last - 1;
  if (last_nonzero == 0) return false;
  const int tail = counts_[last_nonzero];
  counts_[last_nonzero] = 0;
  counts_[last_nonzero - 1] += 1;
  counts_.back() = tail - 1;
  return true;
}

std::optional<DiscreteJointDistribution> DiscreteGridEnumerator::next() {
  while (!done_) {
    if (started_) {
      if (!advance()) {
        done_ = true;
        break;
      }
    }
    started_ = true;

    Eigen::MatrixXd pmf(m_x_, m_y_);
    for (Eigen::Index i = 0; i < m_x_; ++i) {
      for (Eigen::Index j = 0; j < m_y_; ++j) {
        pmf(i, j) = static_cast<double>(counts_[static_cast<std::size_t>(i * m_y_ + j)]) /
                    static_cast<double>(resolution_);
      }
    }
    DiscreteJointDistribution dist(x_support_, y_support_, std::move(pmf));
    if (dependent_only_ && theta(dist).cwiseAbs().maxCoeff() < kIndependenceTol) continue;
    return dist;
  }
  return std::nullopt;
}

}  // namespace hsickit
