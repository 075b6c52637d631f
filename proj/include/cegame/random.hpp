// Copyright 2026 The cegame Authors
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

#include <cstddef>
#include <cstdint>

#include "cegame/core.hpp"

namespace cegame {

// SplitMix64 (Steele, Lea and Flood). Fully specified here so that seeds
// reproduce the same stream on every platform and in other languages:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  // Uniform integer in [lo, hi] by rejection sampling on the raw stream:
  // draws below 2^64 - (2^64 mod span) are reduced mod span.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1): the top 53 bits of one draw.
  double uniform01();

 private:
  std::uint64_t state_;
};

// Random game of the benchmark family: n evaders, m sites, unit limits,
// a = c = 0. For each player i = 0..n in turn: r[i] ~ U{1..10} (clamped to
// m), then for each site in order b[i][s] ~ U{1..10} and |d[i][s]| ~ U{1..10}
// (negated for evaders).
CEGame gen_random(std::size_t num_evaders, std::size_t num_sites, std::uint64_t seed);

}  // namespace cegame
