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
#include <limits>
#include <string_view>
#include <vector>

#include <Eigen/Core>

namespace hsickit {

/// SplitMix64 (Steele, Lea & Flood). Small-state counter-based generator; a
/// stream is fully determined by its starting state, which makes it cheap to
/// open one stream per (seed, trial, replicate) triple.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t state) noexcept : state_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept { return mix(state_ += kGolden); }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

 private:
  std::uint64_t state_;
};

/// Name recorded in results so a reader knows how replicates were drawn.
inline constexpr std::string_view kGeneratorName = "splitmix64-streams/std::shuffle";

/// Seed of the stream addressed by (seed, index). Distinct indices give
/// decorrelated streams; the mapping depends on nothing else.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64::mix(SplitMix64::mix(seed + SplitMix64::kGolden) ^
                         (index * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL));
}

constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index,
                                    std::uint64_t sub) noexcept {
  return derive_seed(derive_seed(seed, index), sub);
}

/// Uniformly random permutation of {0..n-1} drawn from stream (seed, index).
std::vector<Eigen::Index> draw_permutation(std::uint64_t seed, std::uint64_t index, Eigen::Index n);

}  // namespace hsickit
