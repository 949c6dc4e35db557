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

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsickit/hsic.hpp"

namespace hsickit {

/// (x, y) = (r cos t, r sin t) + noise * (g, g'), t ~ U[0, 2 pi), g, g' ~ N(0, 1).
/// Dependent, yet x and y are uncorrelated.
struct RingUniform {
  double radius = 1.0;
  double noise = 0.0;
};

/// x ~ N(0, I_dim_x) and y ~ N(0, I_dim_y), independent.
struct IndependentGaussian {
  Eigen::Index dim_x = 1;
  Eigen::Index dim_y = 1;
};

/// Two independent unit-variance uniform sources, rotated in the plane:
/// (x, y) = R(angle) (s1, s2). Independent only at multiples of pi/2.
struct Rotated {
  double angle = 0.0;
};

/// i.i.d. draws of support pairs from a given joint pmf.
struct DiscreteGiven {
  DiscreteJointDistribution distribution;
};

enum class GeneratorKind { RingUniform, IndependentGaussian, Rotated, DiscreteGiven };

std::string to_string(GeneratorKind kind);

struct GeneratorSpec {
  std::variant<RingUniform, IndependentGaussian, Rotated, DiscreteGiven> params;
  std::uint64_t seed = 0;

  GeneratorKind kind() const noexcept;
  /// Throws InvalidArgument on r <= 0, noise < 0, angle outside [0, 2 pi),
  /// or non-positive dimensions.
  void validate() const;
};

/// Draws n pairs. Pure function of (spec, n).
Dataset sample(const GeneratorSpec& spec, Eigen::Index n);

/// m distinct integers symmetric about zero, as a one-column point set:
/// {0}, {-1, 1}, {-1, 0, 1}, {-2, -1, 1, 2}, ...
PointSet symmetric_integer_support(Eigen::Index m);

/// Walks every m_x x m_y pmf whose entries are multiples of 1/resolution, on
/// the fixed supports symmetric_integer_support(m_x) and (m_y). Order is
/// lexicographic in the cell counts, starting with all mass on the last cell.
class DiscreteGridEnumerator {
 public:
  /// Throws InvalidArgument unless 1 <= m_x, m_y <= 4 and resolution >= 2.
  DiscreteGridEnumerator(Eigen::Index m_x, Eigen::Index m_y, int resolution,
                         bool dependent_only);

  /// Next pmf, or nullopt when exhausted. With dependent_only, pmfs whose
  /// theta has max |entry| < 1e-12 are skipped.
  std::optional<DiscreteJointDistribution> next();

  static constexpr double kIndependenceTol = 1e-12;

 private:
  bool advance();

  PointSet x_support_;
  PointSet y_support_;
  Eigen::Index m_x_;
  Eigen::Index m_y_;
  int resolution_;
  bool dependent_only_;
  std::vector<int> counts_;
  bool started_ = false;
  bool done_ = false;
};

}  // namespace hsickit
