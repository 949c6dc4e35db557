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

#include "hsickit/error.hpp"

namespace hsickit {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::UnresolvedBandwidth: return "UnresolvedBandwidth";
    case Errc::AllPointsIdentical: return "AllPointsIdentical";
    case Errc::DuplicateSupportPoint: return "DuplicateSupportPoint";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidDistribution: return "InvalidDistribution";
    case Errc::InsufficientSamples: return "InsufficientSamples";
    case Errc::InputFormat: return "InputFormat";
    case Errc::Numerical: return "Numerical";
  }
  return "Unknown";
}

}  // namespace hsickit
