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

// hsickit: kernel independence testing from the command line.
//
//   hsickit test --csv data.csv --x-cols a --y-cols b [--kernel-x gaussian:median] ...
//   hsickit reproduce-ring [--n 200 --trials 200 --permutations 500 --alpha 0.05]
//   hsickit oracle-sweep [--mx 2 --my 2 --resolution 4 --family gaussian]
//   hsickit sample --generator ring --n 200 --seed 1 > ring.csv
//
// JSON reports go to stdout, human-readable summaries to stderr.
// Exit codes: 0 ran, 2 input error, 3 numerical failure.

#include <exception>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hsickit/cli/commands.hpp"
#include "hsickit/error.hpp"
#include "hsickit/parallel.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitNumerical = 3;

void add_permutation_flags(CLI::App& cmd, std::size_t& permutations, double& alpha,
                           std::uint64_t& seed, unsigned& threads) {
  cmd.add_option("--permutations,-B", permutations, "Number of random permutations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd.add_option("--alpha", alpha, "Test level in (0, 1)")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd.add_option("--seed", seed, "Seed for all random draws")->capture_default_str();
  cmd.add_option("--threads", threads, "Worker threads (results do not depend on this)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hsickit::cli;

  CLI::App app{"Kernel (HSIC) independence tests"};
  app.set_version_flag("--version", std::string(cli::version()));
  app.require_subcommand(1);

  const unsigned machine_threads = hsickit::default_thread_count();

  cli::TestOptions test;
  test.threads = machine_threads;
  auto* test_cmd = app.add_subcommand("test", "Permutation HSIC test on columns of a CSV file");
  test_cmd->add_option("--csv", test.csv_path, "Input CSV with a header row")->required();
  test_cmd->add_option("--x-cols", test.x_columns, "Comma-separated x column names")
      ->required()
      ->delimiter(',');
  test_cmd->add_option("--y-cols", test.y_columns, "Comma-separated y column names")
      ->required()
      ->delimiter(',');
  test_cmd->add_option("--kernel-x", test.kernel_x, "family[:bandwidth|:median]")->capture_default_str();
  test_cmd->add_option("--kernel-y", test.kernel_y, "family[:bandwidth|:median]")->capture_default_str();
  add_permutation_flags(*test_cmd, test.permutations, test.alpha, test.seed, test.threads);

  cli::ReproduceRingOptions ring;
  ring.threads = machine_threads;
  auto* ring_cmd = app.add_subcommand(
      "reproduce-ring", "Rejection rates on the circular ring: Gaussian/linear vs Gaussian/Gaussian");
  ring_cmd->add_option("--n", ring.n, "Sample size per trial")->check(CLI::Range(2L, 1L << 20))->capture_default_str();
  ring_cmd->add_option("--trials", ring.trials, "Number of trials")->check(CLI::PositiveNumber)->capture_default_str();
  ring_cmd->add_option("--radius", ring.radius, "Ring radius")->capture_default_str();
  ring_cmd->add_option("--noise", ring.noise, "Gaussian noise added to each coordinate")->capture_default_str();
  add_permutation_flags(*ring_cmd, ring.permutations, ring.alpha, ring.seed, ring.threads);

  cli::OracleSweepOptions sweep;
  std::string family;
  auto* sweep_cmd = app.add_subcommand(
      "oracle-sweep", "Exact population HSIC over every pmf on a grid of small discrete supports");
  sweep_cmd->add_option("--mx", sweep.m_x, "Support size of X (<= 4)")->check(CLI::Range(1L, 4L))->capture_default_str();
  sweep_cmd->add_option("--my", sweep.m_y, "Support size of Y (<= 4)")->check(CLI::Range(1L, 4L))->capture_default_str();
  sweep_cmd->add_option("--resolution", sweep.resolution, "pmf entries are multiples of 1/resolution")
      ->check(CLI::Range(2, 64))
      ->capture_default_str();
  sweep_cmd->add_option("--kernel-x", sweep.kernel_x, "family[:bandwidth|:median]")->capture_default_str();
  sweep_cmd->add_option("--kernel-y", sweep.kernel_y, "family[:bandwidth|:median]")->capture_default_str();
  sweep_cmd->add_option("--family", family, "Shorthand setting both kernels (bandwidth 1 unless given)");
  sweep_cmd->add_option("--max-listed", sweep.max_listed, "Counterexamples written to the report")
      ->capture_default_str();

  cli::SampleOptions sample;
  std::string output = "-";
  auto* sample_cmd = app.add_subcommand("sample", "Write a synthetic dataset as CSV");
  sample_cmd->add_option("--generator", sample.generator, "ring | independent-gaussian | rotated")
      ->capture_default_str();
  sample_cmd->add_option("--n", sample.n, "Sample size")->check(CLI::PositiveNumber)->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed)->capture_default_str();
  sample_cmd->add_option("--radius", sample.radius)->capture_default_str();
  sample_cmd->add_option("--noise", sample.noise)->capture_default_str();
  sample_cmd->add_option("--angle", sample.angle, "Rotation angle in radians")->capture_default_str();
  sample_cmd->add_option("--dim-x", sample.dim_x)->capture_default_str();
  sample_cmd->add_option("--dim-y", sample.dim_y)->capture_default_str();
  sample_cmd->add_option("--out,-o", output, "Output file, '-' for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    nlohmann::json report;
    if (*test_cmd) {
      report = cli::run_test(test, std::cerr);
    } else if (*ring_cmd) {
      report = cli::run_reproduce_ring(ring, std::cerr);
    } else if (*sweep_cmd) {
      if (!family.empty()) {
        const bool has_bandwidth = family.find(':') != std::string::npos || family == "linear";
        sweep.kernel_x = sweep.kernel_y = has_bandwidth ? family : family + ":1";
      }
      report = cli::run_oracle_sweep(sweep, std::cerr);
    } else if (*sample_cmd) {
      if (output == "-") {
        cli::run_sample(sample, std::cout);
      } else {
        std::ofstream out(output);
        if (!out) throw hsickit::Error(hsickit::Errc::InputFormat, "cannot write '" + output + "'");
        cli::run_sample(sample, out);
      }
      return 0;
    }
    std::cout << report.dump(2) << std::endl;
    return 0;
  } catch (const hsickit::Error& e) {
    std::cerr << "error (" << hsickit::to_string(e.code()) << "): " << e.what() << '\n';
    return e.is_input_error() ? kExitInput : kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitNumerical;
  }
}
