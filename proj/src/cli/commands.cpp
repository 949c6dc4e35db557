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

#include "hsickit/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <optional>

#include "hsickit/cli/csv.hpp"
#include "hsickit/cli/kernel_flag.hpp"
#include "hsickit/datagen.hpp"
#include "hsickit/error.hpp"
#include "hsickit/independence_test.hpp"
#include "hsickit/rng.hpp"

#ifndef HSICKIT_VERSION
#define HSICKIT_VERSION "unknown"
#endif

namespace hsickit::cli {
namespace {

using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

// Shortest decimal form that parses back to the same double.
std::string exact(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string joined(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += ',';
    out += item;
  }
  return out;
}

json optional_number(const std::optional<double>& value) {
  return value ? json(*value) : json(nullptr);
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

json matrix_json(const Eigen::MatrixXd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json support_json(const PointSet& support) {
  json out = json::array();
  for (Eigen::Index i = 0; i < support.rows(); ++i) {
    json p = json::array();
    for (Eigen::Index d = 0; d < support.cols(); ++d) p.push_back(support(i, d));
    out.push_back(std::move(p));
  }
  return out;
}

json report_header(std::string_view command, json parameters, std::vector<std::string> argv) {
  json report;
  report["command"] = command;
  report["version"] = version();
  report["parameters"] = std::move(parameters);
  report["argv"] = std::move(argv);
  return report;
}

}  // namespace

std::string_view version() { return HSICKIT_VERSION; }

json run_test(const TestOptions& options, std::ostream& log) {
  const auto start = Clock::now();
  const KernelSpec kx = parse_kernel_flag(options.kernel_x);
  const KernelSpec ky = parse_kernel_flag(options.kernel_y);
  const Dataset data = load_dataset(options.csv_path, options.x_columns, options.y_columns);
  if (data.size() == 2) {
    log << "warning: n = 2 gives a vacuous permutation null (only 2 distinct permutations)\n";
  }

  PermutationConfig cfg;
  cfg.num_permutations = options.permutations;
  cfg.alpha = options.alpha;
  cfg.seed = options.seed;
  cfg.threads = options.threads;
  const TestResult result = permutation_test(data, kx, ky, cfg);

  json parameters = {
      {"csv", options.csv_path},
      {"x_columns", options.x_columns},
      {"y_columns", options.y_columns},
      {"kernel_x", kx.to_string()},
      {"kernel_y", ky.to_string()},
      {"permutations", options.permutations},
      {"alpha", options.alpha},
      {"seed", options.seed},
      {"threads", options.threads},
  };
  json report = report_header(
      "test", std::move(parameters),
      {"test", "--csv", options.csv_path, "--x-cols", joined(options.x_columns), "--y-cols",
       joined(options.y_columns), "--kernel-x", kx.to_string(), "--kernel-y", ky.to_string(),
       "--permutations", std::to_string(options.permutations), "--alpha", exact(options.alpha),
       "--seed", std::to_string(options.seed)});

  report["n"] = data.size();
  report["statistic"] = result.statistic.value;
  report["statistic_raw"] = result.statistic.raw;
  report["p_value"] = result.p_value;
  report["reject"] = result.reject;
  report["alpha"] = options.alpha;
  report["seed"] = result.seed;
  report["num_permutations"] = result.num_permutations;
  report["null_quantile"] = result.null_quantile;
  report["null_summary"] = {{"mean", result.null_summary.mean},
                            {"stddev", result.null_summary.stddev},
                            {"min", result.null_summary.min},
                            {"max", result.null_summary.max}};
  report["resolved_bandwidth_x"] = optional_number(result.resolved_bandwidth_x);
  report["resolved_bandwidth_y"] = optional_number(result.resolved_bandwidth_y);
  report["kernel_x_characteristic"] = kx.claimed_characteristic();
  report["kernel_y_characteristic"] = ky.claimed_characteristic();
  report["generator"] = result.generator;
  report["duration_seconds"] = seconds_since(start);

  log << "HSIC = " << result.statistic.value << ", p = " << result.p_value << " (B = "
      << result.num_permutations << "): " << (result.reject ? "reject" : "do not reject")
      << " independence at alpha = " << options.alpha << '\n';
  return report;
}

json run_reproduce_ring(const ReproduceRingOptions& options, std::ostream& log) {
  const auto start = Clock::now();
  GeneratorSpec sampler{RingUniform{options.radius, options.noise}, options.seed};
  PermutationConfig cfg;
  cfg.num_permutations = options.permutations;
  cfg.alpha = options.alpha;
  cfg.seed = options.seed;
  cfg.threads = options.threads;

  struct Row {
    const char* label;
    KernelSpec kx;
    KernelSpec ky;
  };
  const Row rows[] = {
      {"non-characteristic on Y", KernelSpec::gaussian(MedianHeuristic{}), KernelSpec::linear()},
      {"characteristic on both", KernelSpec::gaussian(MedianHeuristic{}),
       KernelSpec::gaussian(MedianHeuristic{})},
  };

  json parameters = {
      {"n", options.n},
      {"trials", options.trials},
      {"alpha", options.alpha},
      {"permutations", options.permutations},
      {"seed", options.seed},
      {"radius", options.radius},
      {"noise", options.noise},
      {"threads", options.threads},
  };
  json report = report_header(
      "reproduce-ring", std::move(parameters),
      {"reproduce-ring", "--n", std::to_string(options.n), "--trials", std::to_string(options.trials),
       "--alpha", exact(options.alpha), "--permutations", std::to_string(options.permutations),
       "--seed", std::to_string(options.seed), "--radius", exact(options.radius), "--noise",
       exact(options.noise)});

  json configurations = json::array();
  for (const Row& row : rows) {
    const PowerResult power = power_experiment(sampler, row.kx, row.ky, cfg, options.trials, options.n);
    json bandwidth_x = json::array();
    json bandwidth_y = json::array();
    for (std::size_t t = 0; t < power.trials; ++t) {
      bandwidth_x.push_back(optional_number(power.resolved_bandwidth_x[t]));
      bandwidth_y.push_back(optional_number(power.resolved_bandwidth_y[t]));
    }
    configurations.push_back({
        {"label", row.label},
        {"kernel_x", row.kx.to_string()},
        {"kernel_y", row.ky.to_string()},
        {"kernel_x_characteristic", row.kx.claimed_characteristic()},
        {"kernel_y_characteristic", row.ky.claimed_characteristic()},
        {"rejection_rate", power.rejection_rate},
        {"trials", power.trials},
        {"p_values", power.p_values},
        {"statistics", power.statistics},
        {"resolved_bandwidth_x", std::move(bandwidth_x)},
        {"resolved_bandwidth_y", std::move(bandwidth_y)},
    });
    log << row.label << " (" << row.kx.to_string() << " / " << row.ky.to_string()
        << "): rejection rate " << power.rejection_rate << " over " << power.trials << " trials\n";
  }
  report["configurations"] = std::move(configurations);
  report["generator"] = std::string(kGeneratorName);
  report["duration_seconds"] = seconds_since(start);
  return report;
}

json run_oracle_sweep(const OracleSweepOptions& options, std::ostream& log) {
  const auto start = Clock::now();
  const KernelSpec kx_flag = parse_kernel_flag(options.kernel_x);
  const KernelSpec ky_flag = parse_kernel_flag(options.kernel_y);

  DiscreteGridEnumerator grid(options.m_x, options.m_y, options.resolution, false);
  const PointSet x_support = symmetric_integer_support(options.m_x);
  const PointSet y_support = symmetric_integer_support(options.m_y);
  const KernelSpec kx = kx_flag.resolved_for(x_support);
  const KernelSpec ky = ky_flag.resolved_for(y_support);
  const bool characteristic = kx.claimed_characteristic() && ky.claimed_characteristic();

  std::size_t total = 0, dependent = 0, counterexample_count = 0;
  std::optional<double> min_dependent, max_independent;
  json min_dependent_pmf = nullptr;
  json counterexamples = json::array();
  while (auto dist = grid.next()) {
    ++total;
    const Eigen::MatrixXd th = theta(*dist);
    const double theta_max = th.cwiseAbs().maxCoeff();
    const double value = population_hsic(*dist, kx, ky).raw;
    if (theta_max < DiscreteGridEnumerator::kIndependenceTol) {
      if (!max_independent || value > *max_independent) max_independent = value;
      continue;
    }
    ++dependent;
    if (!min_dependent || value < *min_dependent) {
      min_dependent = value;
      min_dependent_pmf = matrix_json(dist->pmf());
    }
    if (value < kSweepIndependentCeiling) {
      ++counterexample_count;
      if (counterexamples.size() < options.max_listed) {
        counterexamples.push_back(
            {{"pmf", matrix_json(dist->pmf())}, {"hsic", value}, {"theta_max_abs", theta_max}});
      }
    }
  }

  json parameters = {
      {"m_x", options.m_x},
      {"m_y", options.m_y},
      {"resolution", options.resolution},
      {"kernel_x", kx_flag.to_string()},
      {"kernel_y", ky_flag.to_string()},
      {"max_listed", options.max_listed},
  };
  json report = report_header(
      "oracle-sweep", std::move(parameters),
      {"oracle-sweep", "--mx", std::to_string(options.m_x), "--my", std::to_string(options.m_y),
       "--resolution", std::to_string(options.resolution), "--kernel-x", kx_flag.to_string(),
       "--kernel-y", ky_flag.to_string(), "--max-listed", std::to_string(options.max_listed)});

  report["x_support"] = support_json(x_support);
  report["y_support"] = support_json(y_support);
  report["resolved_kernel_x"] = kx.to_string();
  report["resolved_kernel_y"] = ky.to_string();
  report["resolved_bandwidth_x"] = optional_number(kx.bandwidth());
  report["resolved_bandwidth_y"] = optional_number(ky.bandwidth());
  report["characteristic"] = characteristic;
  report["total"] = total;
  report["dependent"] = dependent;
  report["independent"] = total - dependent;
  report["min_hsic_dependent"] = optional_number(min_dependent);
  report["min_hsic_dependent_pmf"] = std::move(min_dependent_pmf);
  report["max_hsic_independent"] = optional_number(max_independent);
  report["counterexample_count"] = counterexample_count;
  report["counterexamples"] = std::move(counterexamples);

  const bool dependent_ok = !min_dependent || *min_dependent > kSweepDependentFloor;
  const bool independent_ok = !max_independent || *max_independent < kSweepIndependentCeiling;
  std::string verdict;
  if (characteristic) {
    verdict = dependent_ok && independent_ok ? "PASS" : "FAIL";
  } else {
    verdict = counterexample_count > 0 ? "COUNTEREXAMPLES_FOUND" : "NO_COUNTEREXAMPLES";
  }
  report["verdict"] = verdict;
  report["duration_seconds"] = seconds_since(start);

  log << "oracle sweep " << options.m_x << "x" << options.m_y << " @ 1/" << options.resolution
      << " with " << kx.to_string() << " / " << ky.to_string() << ": " << total
      << " pmfs, " << dependent << " dependent, " << counterexample_count
      << " dependent with zero HSIC -> " << verdict << '\n';
  return report;
}

void run_sample(const SampleOptions& options, std::ostream& out) {
  GeneratorSpec spec;
  spec.seed = options.seed;
  if (options.generator == "ring") {
    spec.params = RingUniform{options.radius, options.noise};
  } else if (options.generator == "independent-gaussian") {
    spec.params = IndependentGaussian{options.dim_x, options.dim_y};
  } else if (options.generator == "rotated") {
    spec.params = Rotated{options.angle};
  } else {
    throw Error(Errc::InvalidArgument, "unknown generator '" + options.generator +
                                           "' (expected ring, independent-gaussian or rotated)");
  }
  write_csv(out, sample(spec, options.n));
}

}  // namespace hsickit::cli
