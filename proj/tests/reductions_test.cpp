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

#include "cegame/reductions.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cegame/errors.hpp"
#include "cegame/flow.hpp"
#include "cegame/nash.hpp"
#include "cegame/random.hpp"
#include "oracles.hpp"

namespace cegame {
namespace {

SecurityGameSpec two_attackers() {
  SecurityGameSpec spec;
  spec.targets = {"t"};
  spec.defender = {1.0, {1.0}, {-10.0}};
  spec.attackers = {{"att1", 0.5, 1.0, {-5.0}, {5.0}}, {"att2", 0.5, 1.0, {-9.0}, {10.0}}};
  return spec;
}

TestGameSpec one_question() {
  TestGameSpec spec;
  spec.questions = {"q"};
  spec.scores = {5.0};
  spec.weights = {4.0};
  spec.test_length = 1.0;
  spec.takers = {{"taker", 1.0, 1.0, {0}, 1.0}};
  return spec;
}

void expect_row(const CEGame& g, std::size_t i, double a, double b, double c, double d) {
  EXPECT_EQ(g.a(i, 0), a);
  EXPECT_EQ(g.b(i, 0), b);
  EXPECT_EQ(g.c(i, 0), c);
  EXPECT_EQ(g.d(i, 0), d);
}

TEST(SecurityToCe, CoefficientRows) {
  const CEGame g = security_to_ce(two_attackers());
  expect_row(g, 0, -10.0, 0.0, 0.0, 11.0);
  expect_row(g, 1, 0.0, 5.0, 0.0, -10.0);
  expect_row(g, 2, 0.0, 10.0, 0.0, -19.0);
  EXPECT_EQ(g.resource[1], 0.5);
  EXPECT_EQ(g.limit(2, 0), 0.5);
  EXPECT_TRUE(validate_game(g).empty());
}

TEST(SecurityToCe, SingleCertainType) {
  SecurityGameSpec spec = two_attackers();
  spec.attackers.resize(1);
  spec.attackers[0].probability = 1.0;
  const CEGame g = security_to_ce(spec);
  EXPECT_EQ(g.resource[1], 1.0);
  EXPECT_EQ(g.limit(1, 0), 1.0);
}

TEST(SecurityToCe, SignViolations) {
  SecurityGameSpec spec = two_attackers();
  spec.defender.covered = {-10.0};
  EXPECT_THROW(security_to_ce(spec), ValidationError);
  spec = two_attackers();
  spec.attackers[1].covered = {10.0};
  EXPECT_THROW(security_to_ce(spec), ValidationError);
  spec = two_attackers();
  spec.attackers[1].probability = 0.7;
  EXPECT_THROW(security_to_ce(spec), ValidationError);
}

TEST(TestToCe, BeforeSwap) {
  const CEGame g = test_to_ce_unswapped(one_question());
  expect_row(g, 0, 0.0, 4.0, 0.0, -4.0);
  expect_row(g, 1, -5.0, 0.0, 0.0, 5.0);
}

TEST(TestToCe, AfterSwap) {
  const CEGame g = test_to_ce(one_question());
  expect_row(g, 0, -4.0, -4.0, 4.0, 4.0);
  expect_row(g, 1, 5.0, 5.0, -5.0, -5.0);
  EXPECT_TRUE(validate_game(g).empty());
}

TEST(TestToCe, EasyQuestionCostsNothing) {
  TestGameSpec spec = one_question();
  spec.questions = {"q", "easy"};
  spec.scores = {5.0, 3.0};
  spec.weights = {4.0, 2.0};
  const CEGame g = test_to_ce_unswapped(spec);
  EXPECT_EQ(g.a(1, 1), 0.0);
  EXPECT_EQ(g.d(1, 1), 0.0);
  EXPECT_EQ(g.b(0, 1), 0.0);
}

TEST(TestToCe, ExpectedScoreLossMatchesUtility) {
  // Taker memorizes question q with probability x / (p v); the expected
  // score lost to the test is s * P(test) * (1 - P(memorize)).
  TestGameSpec spec = one_question();
  spec.takers[0].probability = 0.5;
  spec.takers[0].importance = 0.8;
  const CEGame g = test_to_ce_unswapped(spec);
  const double mass = 0.5 * 0.8;
  StrategyProfile p = zero_profile(g);
  p.x(0, 0) = 0.7;               // probability the question is on the test
  p.x(1, 0) = mass * 0.25;       // memorized with probability 0.25
  const double loss = 5.0 * 0.7 * (1.0 - 0.25);
  EXPECT_NEAR(player_utility(g, p, 1), -loss, 1e-12);
}

TEST(TestToCe, RejectsZeroMass) {
  TestGameSpec spec = one_question();
  spec.takers[0].importance = 0.0;
  EXPECT_THROW(test_to_ce_unswapped(spec), ValidationError);
}

TEST(SwapRoles, IsAnInvolution) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CEGame g = gen_random(3, 5, seed);
    EXPECT_EQ(swap_roles(swap_roles(g)), g) << seed;
  }
}

TEST(SwapRoles, PreservesUtilities) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CEGame g = gen_random(1 + seed % 3, 2 + seed % 5, seed);
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      for (std::size_t s = 0; s < g.num_sites(); ++s) {
        g.a(i, s) = 10.0 * unit(rng) - 5.0;
        g.c(i, s) = 10.0 * unit(rng) - 5.0;
        g.limit(i, s) = 0.5 + unit(rng);
      }
    }
    StrategyProfile p = zero_profile(g);
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      for (std::size_t s = 0; s < g.num_sites(); ++s) p.x(i, s) = g.limit(i, s) * unit(rng);
    }
    const CEGame h = swap_roles(g);
    const StrategyProfile q = swap_profile(g, p);
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      EXPECT_NEAR(player_utility(g, p, i), player_utility(h, q, i), 1e-9) << seed << " " << i;
    }
  }
}

TEST(MatchingToCe, Coefficients) {
  MatchingSpec spec;
  spec.left = {{"u", 1.0}};
  spec.right = {{"v1", 0.5}, {"v2", 0.5}};
  spec.edges = {{0, 0, 1.0, 0.0}, {0, 1, 1.0, 1.0}};
  const CEGame g = matching_to_ce(spec);
  EXPECT_EQ(g.d(1, 0), -1.0);
  EXPECT_EQ(g.d(0, 0), 2.0);
  EXPECT_EQ(g.resource[0], 1.0);
  EXPECT_EQ(g.resource[1], 1.0);
  EXPECT_TRUE(validate_game(g).empty());
}

TEST(MatchingToCe, SinkCapacitiesForceSplit) {
  MatchingSpec spec;
  spec.left = {{"u", 1.0}};
  spec.right = {{"v1", 0.5}, {"v2", 0.5}};
  spec.edges = {{0, 0, 1.0, 0.0}, {0, 1, 1.0, 1.0}};
  const CEGame g = matching_to_ce(spec);
  const auto sol = nash::solve_nash(g);
  const auto m = extract_matching(g, sol.profile);
  EXPECT_NEAR(m.flow(0, 0), 0.5, 1e-6);
  EXPECT_NEAR(m.flow(0, 1), 0.5, 1e-6);
  EXPECT_NEAR(m.cost, 0.5, 1e-6);
}

TEST(MatchingToCe, SingleEdge) {
  MatchingSpec spec;
  spec.left = {{"u", 0.7}};
  spec.right = {{"v", 0.7}};
  spec.edges = {{0, 0, 0.7, 1.5}};
  const CEGame g = matching_to_ce(spec);
  const auto m = extract_matching(g, nash::solve_nash(g).profile);
  EXPECT_NEAR(m.flow(0, 0), 0.7, 1e-9);
  EXPECT_NEAR(m.cost, 1.05, 1e-9);
}

TEST(MatchingToCe, RandomFourByFourMatchesMinCostFlow) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 10; ++trial) {
    MatchingSpec spec;
    for (int k = 0; k < 4; ++k) spec.left.push_back({"u" + std::to_string(k), 0.25});
    for (int k = 0; k < 4; ++k) spec.right.push_back({"v" + std::to_string(k), 0.25});
    for (std::size_t u = 0; u < 4; ++u) {
      for (std::size_t v = 0; v < 4; ++v) spec.edges.push_back({u, v, 1.0, 2.0 * unit(rng)});
    }
    const CEGame g = matching_to_ce(spec);
    const auto sol = nash::solve_nash(g);
    for (std::size_t v = 0; v < 4; ++v) EXPECT_GT(sol.profile.x(0, v), 0.0);
    auto net = testing::matching_network(spec);
    const double best = flow::min_cost_flow(net);
    EXPECT_NEAR(extract_matching(g, sol.profile).cost, best, 1e-6) << trial;
  }
}

TEST(MatchingToCe, RejectsBadInstances) {
  MatchingSpec spec;
  spec.left = {{"u", 1.0}};
  spec.right = {{"v", 0.0}};
  EXPECT_THROW(matching_to_ce(spec), ValidationError);
  spec.right = {{"v", 0.5}};
  EXPECT_THROW(matching_to_ce(spec), ValidationError);
}

}  // namespace
}  // namespace cegame
