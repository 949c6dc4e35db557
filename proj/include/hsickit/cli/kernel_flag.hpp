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

#include <string_view>

#include "hsickit/kernels.hpp"

namespace hsickit::cli {

/// Parses family[:bandwidth|:median], e.g. "gaussian:median", "laplace:0.5",
/// "linear". A bare "gaussian" or "laplace" means the median heuristic.
/// Throws InvalidArgument.
KernelSpec parse_kernel_flag(std::string_view flag);

}  // namespace hsickit::cli
