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

#include "cegame/stackelberg.hpp"

#include <gtest/gtest.h>

#include "cegame/errors.hpp"
#include "cegame/random.hpp"
#include "oracles.hpp"

namespace cegame {
namespace {

CEGame symmetric() {
  CEGame g = make_game(1, 2);
  g.resource = {1.0, 1.0};
  for (std::size_t s = 0; s < 2; ++s) {
    g.a(0, s) = -10.0;
    g.d(0, s) = 11.0;
    g.b(1, s) = 5.0;
    g.d(1, s) = -10.0;
  }
  return g;
}

TEST(Stackelberg, SymmetricGameSplitsCoverage) {
  const auto sol = solve_stackelberg(symmetric());
  EXPECT_NEAR(sol.coverage[0], 0.5, 1e-9);
  EXPECT_NEAR(sol.coverage[1], 0.5, 1e-9);
  EXPECT_NEAR(sol.catcher_utility, -4.5, 1e-9);
  // A 1e-4 grid contains the optimum here.
  CEGame g = symmetric();
  EXPECT_NEAR(testing::stackelberg_grid(g, 10000).catcher_utility, -4.5, 1e-12);
}

TEST(Stackelberg, FullCoverageForced) {
  CEGame g = gen_random(1, 3, 4);
  g.resource = {3.0, 1.0};
  const auto sol = solve_stackelberg(g);
  for (double c : sol.coverage) EXPECT_DOUBLE_EQ(c, 1.0);
  // With every site covered the evader compares b + d; ties favor the catcher.
  double top = -1e300;
  for (std::size_t s = 0; s < 3; ++s) top = std::max(top, g.b(1, s) + g.d(1, s));
  EXPECT_DOUBLE_EQ(g.b(1, sol.attacked_site) + g.d(1, sol.attacked_site), top);
}

TEST(Stackelberg, NoCoverageMeansHighestBase) {
  CEGame g = symmetric();
  g.resource[0] = 0.0;
  g.b(1, 1) = 7.0;
  const auto sol = solve_stackelberg(g);
  EXPECT_EQ(sol.attacked_site, 1u);
  EXPECT_EQ(sol.coverage, (std::vector<double>{0.0, 0.0}));
}

TEST(Stackelberg, TiesResolvedForCatcher) {
  CEGame g = symmetric();
  g.resource[0] = 0.0;
  g.d(0, 1) = 12.0;
  g.a(0, 1) = -5.0;  // attacks on site 1 hurt the catcher less
  EXPECT_EQ(solve_stackelberg(g).attacked_site, 1u);
}

TEST(Stackelberg, RejectsSeveralEvaders) {
  EXPECT_THROW(solve_stackelberg(gen_random(2, 3, 1)), UnsupportedInstance);
}

TEST(Stackelberg, RejectsTightEvaderLimits) {
  CEGame g = symmetric();
  g.resource[1] = 1.0;
  g.limit(1, 0) = 0.5;
  g.limit(1, 1) = 0.5;
  EXPECT_THROW(solve_stackelberg(g), UnsupportedInstance);
}

TEST(Stackelberg, OutputIsBestResponseConsistent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CEGame g = gen_random(1, 2 + seed % 5, seed);
    g.resource[1] = 1.0;
    const auto sol = solve_stackelberg(g);
    double total = 0.0;
    for (std::size_t s = 0; s < g.num_sites(); ++s) {
      total += sol.coverage[s];
      EXPECT_GE(sol.coverage[s], 0.0);
      EXPECT_LE(sol.coverage[s], g.limit(0, s));
    }
    EXPECT_NEAR(total, g.resource[0], 1e-12);
    const std::size_t t = sol.attacked_site;
    const double target_mu = g.b(1, t) + g.d(1, t) * sol.coverage[t];
    for (std::size_t s = 0; s < g.num_sites(); ++s) {
      EXPECT_LE(g.b(1, s) + g.d(1, s) * sol.coverage[s], target_mu + 1e-9) << seed;
    }
  }
}

TEST(Stackelberg, MatchesCoarseGridOnSmallGames) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const std::size_t m = 2 + seed % 2;
    CEGame g = gen_random(1, m, 1000 + seed);
    g.resource = {static_cast<double>(1 + seed % (m - 1)), 1.0};
    const double grid = testing::stackelberg_grid(g, 200).catcher_utility;
    const double exact = solve_stackelberg(g).catcher_utility;
    // The grid is a subset of the feasible commitments.
    EXPECT_LE(grid, exact + 1e-9) << seed;
    EXPECT_LE(exact - grid, 0.25) << seed;
  }
}

}  // namespace
}  // namespace cegame
