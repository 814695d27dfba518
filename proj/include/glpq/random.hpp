// Copyright 2026 The glpq Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GLPQ_RANDOM_HPP_
#define GLPQ_RANDOM_HPP_

#include <cstdint>

namespace glpq {

// Default seed for every randomized harness; overridable per call and via
// the GLPQ_SEED environment variable in the CLI.
inline constexpr std::uint64_t kDefaultSeed = 42;

// Counter-based random stream: the i-th variate is a pure function of
// (seed, i) through the splitmix64 finalizer, so streams are random-access
// and parallel fills produce identical output under any thread count.
struct RandomSource {
  std::uint64_t seed = kDefaultSeed;
  static constexpr const char* algorithm = "splitmix64";
};

namespace detail {
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace detail

inline std::uint64_t bits_at(const RandomSource& rs, std::uint64_t index) {
  return detail::splitmix64_mix(rs.seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Uniform variate in the open interval (0, 1): 53 mantissa bits, offset by
// half an ulp so 0 and 1 are never produced.
inline double uniform_at(const RandomSource& rs, std::uint64_t index) {
  return (static_cast<double>(bits_at(rs, index) >> 11) + 0.5) * 0x1.0p-53;
}

// Deterministically derived independent stream (for per-task substreams).
inline RandomSource substream(const RandomSource& rs, std::uint64_t stream_id) {
  return RandomSource{detail::splitmix64_mix(rs.seed ^ (0xA24BAED4963EE407ULL * (stream_id + 1)))};
}

}  // namespace glpq

#endif  // GLPQ_RANDOM_HPP_
