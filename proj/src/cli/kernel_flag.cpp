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

#include "hsickit/cli/kernel_flag.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "hsickit/error.hpp"

namespace hsickit::cli {

KernelSpec parse_kernel_flag(std::string_view flag) {
  const auto colon = flag.find(':');
  const std::string_view family = flag.substr(0, colon);
  const bool has_arg = colon != std::string_view::npos;
  const std::string_view arg = has_arg ? flag.substr(colon + 1) : std::string_view{};
  const auto bad = [&](const std::string& why) -> KernelSpec {
    throw Error(Errc::InvalidArgument, "invalid kernel flag '" + std::string(flag) + "': " + why);
  };

  if (family == "linear") {
    if (has_arg) return bad("the linear kernel takes no bandwidth");
    return KernelSpec::linear();
  }
  if (family != "gaussian" && family != "laplace") {
    return bad("family must be gaussian, laplace or linear");
  }
  const bool gaussian = family == "gaussian";
  if (!has_arg || arg == "median") {
    return gaussian ? KernelSpec::gaussian(MedianHeuristic{}) : KernelSpec::laplace(MedianHeuristic{});
  }
  double bandwidth = 0.0;
  const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), bandwidth);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    return bad("bandwidth must be a number or 'median'");
  }
  if (!(bandwidth > 0.0) || !std::isfinite(bandwidth)) return bad("bandwidth must be positive");
  return gaussian ? KernelSpec::gaussian(bandwidth) : KernelSpec::laplace(bandwidth);
}

}  // namespace hsickit::cli
