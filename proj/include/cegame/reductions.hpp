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
#include <string>
#include <vector>

#include "cegame/core.hpp"

namespace cegame {

// Multi-resource Bayesian security game. Utilities are per target; `covered`
// applies when an attacked target is defended.
struct SecurityGameSpec {
  struct Defender {
    double resources = 0.0;
    std::vector<double> covered;
    std::vector<double> uncovered;
  };
  struct AttackerType {
    std::string id;
    double probability = 0.0;
    double resources = 0.0;
    std::vector<double> covered;
    std::vector<double> uncovered;
  };
  std::vector<std::string> targets;
  Defender defender;
  std::vector<AttackerType> attackers;
};

// Scored test game: a tester picks `test_length` questions; each taker type
// memorizes up to `memorize` questions and loses `scores[q]` for every hard
// question on the test it has not memorized.
struct TestGameSpec {
  struct Taker {
    std::string id;
    double probability = 0.0;
    double importance = 0.0;
    std::vector<std::size_t> hard;  // indices into questions
    double memorize = 0.0;
  };
  std::vector<std::string> questions;
  std::vector<double> scores;
  std::vector<double> weights;
  double test_length = 0.0;
  std::vector<Taker> takers;
};

// Bipartite min-cost fractional matching: saturate every vertex capacity.
struct MatchingSpec {
  struct Vertex {
    std::string id;
    double capacity = 0.0;
  };
  struct Edge {
    std::size_t left = 0;
    std::size_t right = 0;
    double capacity = 0.0;
    double cost = 0.0;
  };
  std::vector<Vertex> left;
  std::vector<Vertex> right;
  std::vector<Edge> edges;
};

CEGame security_to_ce(const SecurityGameSpec& spec);

// The test game written directly, with the tester as player 0. Its deltas
// have the wrong signs for the solvers.
CEGame test_to_ce_unswapped(const TestGameSpec& spec);
// Role-swapped form of test_to_ce_unswapped: player 0 allocates the
// questions it leaves off the test.
CEGame test_to_ce(const TestGameSpec& spec);

// Reinterprets the catcher's allocation as its complement against the
// limits, which negates every delta while preserving all utilities.
CEGame swap_roles(const CEGame& game);
// The profile of the swapped game matching `profile` of the original.
StrategyProfile swap_profile(const CEGame& game, const StrategyProfile& profile);

// Catcher with unit resource, one evader per left vertex, one site per right
// vertex; an equilibrium's evader allocation is a min-cost matching. The
// original edge costs are kept in CEGame::edge_costs.
CEGame matching_to_ce(const MatchingSpec& spec);

struct MatchingFlow {
  Matrix flow;  // left vertex by right vertex
  double cost = 0.0;
};

// Reads the matching off an equilibrium of a matching_to_ce game.
MatchingFlow extract_matching(const CEGame& game, const StrategyProfile& profile);

}  // namespace cegame
