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
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace hsickit::cli {

/// Version string stamped into every report.
std::string_view version();

struct TestOptions {
  std::string csv_path;
  std::vector<std::string> x_columns;
  std::vector<std::string> y_columns;
  std::string kernel_x = "gaussian:median";
  std::string kernel_y = "gaussian:median";
  std::size_t permutations = 500;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct ReproduceRingOptions {
  long n = 200;
  std::size_t trials = 200;
  double alpha = 0.05;
  std::size_t permutations = 500;
  std::uint64_t seed = 0;
  double radius = 1.0;
  double noise = 0.0;
  unsigned threads = 1;
};

struct OracleSweepOptions {
  long m_x = 2;
  long m_y = 2;
  int resolution = 4;
  std::string kernel_x = "gaussian:1";
  std::string kernel_y = "gaussian:1";
  /// Cap on the number of counterexamples written to the report.
  std::size_t max_listed = 20;
};

struct SampleOptions {
  std::string generator = "ring";
  long n = 200;
  std::uint64_t seed = 0;
  double radius = 1.0;
  double noise = 0.0;
  double angle = 0.0;
  long dim_x = 1;
  long dim_y = 1;
};

// Each run_* function returns the complete JSON report and writes a short
// human-readable summary to `log`. Library errors propagate as hsickit::Error.
// Reports carry "argv": the canonical argument list that reproduces them.

nlohmann::json run_test(const TestOptions& options, std::ostream& log);
nlohmann::json run_reproduce_ring(const ReproduceRingOptions& options, std::ostream& log);
nlohmann::json run_oracle_sweep(const OracleSweepOptions& options, std::ostream& log);

/// Writes the sampled dataset as CSV to `out`.
void run_sample(const SampleOptions& options, std::ostream& out);

/// Threshold separating "zero" from "positive" population HSIC in the sweep.
inline constexpr double kSweepDependentFloor = 1e-10;
inline constexpr double kSweepIndependentCeiling = 1e-12;

}  // namespace hsickit::cli
