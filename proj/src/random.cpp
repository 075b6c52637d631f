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

#include "cegame/random.hpp"

#include <algorithm>
#include <limits>

#include "cegame/errors.hpp"

namespace cegame {

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % span + 1) % span;
  std::uint64_t draw = next();
  while (draw > limit) draw = next();
  return lo + static_cast<std::int64_t>(draw % span);
}

double SplitMix64::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

CEGame gen_random(std::size_t num_evaders, std::size_t num_sites, std::uint64_t seed) {
  if (num_evaders == 0 || num_sites == 0) {
    throw ValidationError("gen_random: need at least one evader and one site");
  }
  SplitMix64 rng(seed);
  CEGame game = make_game(num_evaders, num_sites);
  for (std::size_t k = 0; k < num_evaders; ++k) game.evader_ids[k] = "e" + std::to_string(k + 1);
  const auto cap = static_cast<double>(num_sites);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    game.resource[i] = std::min(cap, static_cast<double>(rng.uniform_int(1, 10)));
    for (std::size_t s = 0; s < num_sites; ++s) {
      game.b(i, s) = static_cast<double>(rng.uniform_int(1, 10));
      const auto delta = static_cast<double>(rng.uniform_int(1, 10));
      game.d(i, s) = i == kCatcher ? delta : -delta;
    }
  }
  return game;
}

}  // namespace cegame
