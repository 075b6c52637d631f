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

#include <cmath>
#include <numeric>

#include "cegame/errors.hpp"

namespace cegame {

namespace {

void require_size(const std::vector<double>& v, std::size_t size, const std::string& what) {
  if (v.size() != size) throw ValidationError(what + ": expected " + std::to_string(size) + " values");
}

}  // namespace

CEGame security_to_ce(const SecurityGameSpec& spec) {
  const std::size_t n = spec.attackers.size();
  const std::size_t m = spec.targets.size();
  require_size(spec.defender.covered, m, "defender covered utilities");
  require_size(spec.defender.uncovered, m, "defender uncovered utilities");

  double total_probability = 0.0;
  for (const auto& type : spec.attackers) {
    if (!(type.probability > 0.0)) throw ValidationError("attacker type probability must be positive");
    total_probability += type.probability;
    require_size(type.covered, m, "attacker covered utilities");
    require_size(type.uncovered, m, "attacker uncovered utilities");
  }
  if (n > 0 && std::abs(total_probability - 1.0) > 1e-9) {
    throw ValidationError("attacker type probabilities must sum to 1");
  }

  CEGame game = make_game(n, m);
  game.sites = spec.targets;
  game.resource[kCatcher] = spec.defender.resources;
  for (std::size_t t = 0; t < m; ++t) {
    const double covered = spec.defender.covered[t];
    const double uncovered = spec.defender.uncovered[t];
    if (!(covered > uncovered)) {
      throw ValidationError("sign violation: defender must prefer covered attacks on target " +
                            spec.targets[t]);
    }
    game.limit(kCatcher, t) = 1.0;
    game.a(kCatcher, t) = uncovered;
    game.b(kCatcher, t) = 0.0;
    game.d(kCatcher, t) = covered - uncovered;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& type = spec.attackers[k];
    const std::size_t i = k + 1;
    game.evader_ids[k] = type.id;
    game.resource[i] = type.probability * type.resources;
    for (std::size_t t = 0; t < m; ++t) {
      if (!(type.covered[t] < type.uncovered[t])) {
        throw ValidationError("sign violation: attacker type " + std::to_string(i) +
                              " must prefer uncovered target " + spec.targets[t]);
      }
      game.limit(i, t) = type.probability;
      game.a(i, t) = 0.0;
      game.b(i, t) = type.uncovered[t];
      game.d(i, t) = type.covered[t] - type.uncovered[t];
    }
  }
  return game;
}

CEGame test_to_ce_unswapped(const TestGameSpec& spec) {
  const std::size_t n = spec.takers.size();
  const std::size_t m = spec.questions.size();
  require_size(spec.scores, m, "question scores");
  require_size(spec.weights, m, "question weights");
  if (spec.test_length > static_cast<double>(m)) {
    throw ValidationError("test length exceeds the question pool");
  }

  CEGame game = make_game(n, m);
  game.sites = spec.questions;
  game.resource[kCatcher] = spec.test_length;
  std::vector<std::vector<bool>> hard(n, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < n; ++k) {
    const auto& taker = spec.takers[k];
    if (taker.memorize > static_cast<double>(m)) {
      throw ValidationError("memorization capacity exceeds the question pool");
    }
    if (taker.probability * taker.importance == 0.0) {
      throw ValidationError("test taker " + std::to_string(k + 1) +
                            " has zero probability times importance");
    }
    for (std::size_t q : taker.hard) {
      if (q >= m) throw ValidationError("hard question index out of range");
      hard[k][q] = true;
    }
  }

  for (std::size_t q = 0; q < m; ++q) {
    double exposure = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      if (hard[k][q]) exposure += spec.takers[k].probability * spec.takers[k].importance;
    }
    game.limit(kCatcher, q) = 1.0;
    game.a(kCatcher, q) = 0.0;
    game.b(kCatcher, q) = spec.weights[q] * exposure;
    game.d(kCatcher, q) = -spec.weights[q];
  }
  for (std::size_t k = 0; k < n; ++k) {
    const auto& taker = spec.takers[k];
    const std::size_t i = k + 1;
    const double mass = taker.probability * taker.importance;
    game.evader_ids[k] = taker.id;
    game.resource[i] = mass * taker.memorize;
    for (std::size_t q = 0; q < m; ++q) {
      game.limit(i, q) = mass;
      game.a(i, q) = hard[k][q] ? -spec.scores[q] : 0.0;
      game.b(i, q) = 0.0;
      game.d(i, q) = hard[k][q] ? spec.scores[q] / mass : 0.0;
    }
  }
  return game;
}

CEGame test_to_ce(const TestGameSpec& spec) { return swap_roles(test_to_ce_unswapped(spec)); }

CEGame swap_roles(const CEGame& game) {
  CEGame out = game;
  const std::size_t m = game.num_sites();
  double capacity = 0.0;
  for (std::size_t s = 0; s < m; ++s) capacity += game.limit(kCatcher, s);
  out.resource[kCatcher] = -game.resource[kCatcher] + capacity;

  for (std::size_t s = 0; s < m; ++s) {
    const double limit0 = game.limit(kCatcher, s);
    out.a(kCatcher, s) = game.a(kCatcher, s) + game.d(kCatcher, s) * limit0;
    out.c(kCatcher, s) = game.c(kCatcher, s) + game.b(kCatcher, s) * limit0;
    out.b(kCatcher, s) = -game.b(kCatcher, s);
    out.d(kCatcher, s) = -game.d(kCatcher, s);
    for (std::size_t i = 1; i < game.num_players(); ++i) {
      out.a(i, s) = -game.a(i, s);
      out.d(i, s) = -game.d(i, s);
      out.b(i, s) = game.b(i, s) + game.d(i, s) * limit0;
      out.c(i, s) = game.c(i, s) + game.a(i, s) * limit0;
    }
  }
  return out;
}

StrategyProfile swap_profile(const CEGame& game, const StrategyProfile& profile) {
  StrategyProfile out = profile;
  for (std::size_t s = 0; s < game.num_sites(); ++s) {
    out.x(kCatcher, s) = game.limit(kCatcher, s) - profile.x(kCatcher, s);
  }
  return out;
}

CEGame matching_to_ce(const MatchingSpec& spec) {
  const std::size_t n = spec.left.size();
  const std::size_t m = spec.right.size();
  double left_total = 0.0;
  double right_total = 0.0;
  for (const auto& u : spec.left) left_total += u.capacity;
  for (const auto& v : spec.right) {
    if (v.capacity == 0.0) throw ValidationError("right vertex " + v.id + " has zero capacity");
    right_total += v.capacity;
  }
  if (std::abs(left_total - right_total) > 1e-9 * std::max(1.0, left_total)) {
    throw ValidationError("matching capacities are unbalanced");
  }

  CEGame game = make_game(n, m);
  Matrix costs(n, m, 0.0);
  std::vector<std::vector<bool>> seen(n, std::vector<bool>(m, false));
  for (std::size_t k = 0; k < n; ++k) {
    game.evader_ids[k] = spec.left[k].id;
    game.resource[k + 1] = spec.left[k].capacity;
    for (std::size_t v = 0; v < m; ++v) {
      // Absent edges get no capacity; their delta only has to be negative.
      game.limit(k + 1, v) = 0.0;
      game.d(k + 1, v) = -1.0;
    }
  }
  game.resource[kCatcher] = 1.0;
  for (std::size_t v = 0; v < m; ++v) {
    game.sites[v] = spec.right[v].id;
    game.limit(kCatcher, v) = 1.0;
    game.d(kCatcher, v) = 1.0 / spec.right[v].capacity;
  }
  for (const auto& e : spec.edges) {
    if (e.left >= n || e.right >= m) throw ValidationError("matching edge endpoint out of range");
    if (seen[e.left][e.right]) throw ValidationError("duplicate matching edge");
    seen[e.left][e.right] = true;
    game.limit(e.left + 1, e.right) = e.capacity;
    game.d(e.left + 1, e.right) = -std::exp(e.cost);
    costs(e.left, e.right) = e.cost;
  }
  game.edge_costs = std::move(costs);
  return game;
}

MatchingFlow extract_matching(const CEGame& game, const StrategyProfile& profile) {
  if (!game.edge_costs) {
    throw ValidationError("extract_matching: game carries no matching edge costs");
  }
  const std::size_t n = game.num_evaders();
  const std::size_t m = game.num_sites();
  MatchingFlow out{Matrix(n, m), 0.0};
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < m; ++v) {
      const double f = profile.x(u + 1, v);
      out.flow(u, v) = f;
      out.cost += f * (*game.edge_costs)(u, v);
    }
  }
  return out;
}

}  // namespace cegame
