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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cegame/matrix.hpp"

namespace cegame {

// Player 0 is the catcher; players 1..n are evaders.
inline constexpr std::size_t kCatcher = 0;

// A Catcher-Evader game. Every coefficient matrix has one row per player
// (catcher first) and one column per site. Player i's utility is
//   sum_s (b[i][s] + d[i][s] * opp[i][s]) * x[i][s] + a[i][s] * opp[i][s] + c[i][s]
// where opp[0][s] is the total evader allocation on s and opp[i][s] for an
// evader is the catcher allocation on s.
struct CEGame {
  std::vector<std::string> sites;
  std::vector<std::string> evader_ids;  // one entry per evader, may be empty strings
  std::vector<double> resource;         // r[i]
  Matrix limit;                         // l[i][s]
  Matrix a;                             // alternating utility
  Matrix b;                             // base utility
  Matrix c;                             // constant utility
  Matrix d;                             // utility change when co-located

  // Original edge costs of a matching instance, one row per evader. Only set
  // by matching_to_ce.
  std::optional<Matrix> edge_costs;

  std::size_t num_evaders() const { return evader_ids.size(); }
  std::size_t num_players() const { return evader_ids.size() + 1; }
  std::size_t num_sites() const { return sites.size(); }

  friend bool operator==(const CEGame&, const CEGame&) = default;
};

// All coefficients zero, limits one, resources zero.
CEGame make_game(std::size_t num_evaders, std::size_t num_sites);

struct StrategyProfile {
  Matrix x;  // x[i][s], players by sites

  // Total evader allocation on a site.
  double evader_total(std::size_t site) const { return x.col_sum(site, 1); }
  // Allocation of player i's opponent on a site.
  double opponent(std::size_t player, std::size_t site) const {
    return player == kCatcher ? evader_total(site) : x(kCatcher, site);
  }

  friend bool operator==(const StrategyProfile&, const StrategyProfile&) = default;
};

StrategyProfile zero_profile(const CEGame& game);

// Equality of a per-resource utility with a threshold: |mu - theta| <= eps * max(1, |theta|).
struct Tolerance {
  double eps = 1e-9;
  bool same(double mu, double theta) const;
  bool above(double mu, double theta) const { return mu > theta && !same(mu, theta); }
  bool below(double mu, double theta) const { return mu < theta && !same(mu, theta); }
};

struct Violation {
  std::string message;
  std::optional<std::size_t> player;
  std::optional<std::size_t> site;
};

// Every violated game invariant. An empty result means the game is valid.
std::vector<Violation> validate_game(const CEGame& game);
// Throws ValidationError listing all violations.
void require_valid(const CEGame& game);

// Per-resource utilities, thresholds, boundary sets and active edges of a
// profile. Thresholds are empty when undefined: theta[0] when every site is
// saturated for the catcher, theta[i] when evader i has no positive support.
struct ProfileView {
  Matrix mu;
  std::vector<std::optional<double>> theta;
  std::vector<std::vector<bool>> boundary;           // B_i
  std::vector<std::vector<bool>> positive_boundary;  // B_i^+ for evaders
  std::vector<bool> open_boundary;                   // catcher sites in B_0 below their limit

  bool active(std::size_t evader, std::size_t site) const {
    return evader != kCatcher && boundary[evader][site];
  }
  std::vector<std::size_t> open_sites() const;
  // Throws Error("threshold undefined") when theta[0] is empty.
  double catcher_threshold() const;
};

// Allocations at most `zero_eps` (or within zero_eps of the limit) are
// treated as zero (saturated) when building thresholds and boundary sets.
ProfileView profile_view(const CEGame& game, const StrategyProfile& profile,
                         Tolerance tol = {}, double zero_eps = 1e-9);

double per_resource_utility(const CEGame& game, const StrategyProfile& profile,
                            std::size_t player, std::size_t site);

double player_utility(const CEGame& game, const StrategyProfile& profile, std::size_t player);

// Exact utility-maximizing allocation for `player` against fixed opponent
// marginals (catcher: total evader allocation per site; evader: catcher
// allocation per site). Greedy fill in descending per-resource utility,
// lowest site index first among ties.
std::vector<double> best_response(const CEGame& game, std::span<const double> opponent,
                                  std::size_t player);

struct PlayerCheck {
  double utility_gap = 0.0;          // u(best response) - u(x)
  double structure_violation = 0.0;  // threshold-structure breach in allocation units
};

struct EquilibriumReport {
  std::vector<PlayerCheck> players;
  double feasibility_violation = 0.0;
  double worst_violation = 0.0;
  bool is_equilibrium = false;
};

EquilibriumReport verify_equilibrium(const CEGame& game, const StrategyProfile& profile,
                                     double eps = 1e-6);

// A lottery over pure assignments; each atom lists the chosen sites.
struct MixedStrategy {
  struct Atom {
    std::vector<std::size_t> sites;
    double probability = 0.0;
  };
  std::vector<Atom> atoms;

  std::vector<double> marginals(std::size_t num_sites) const;
};

// Birkhoff-von Neumann style decomposition of 0/1 marginals summing to an
// integer into subsets of exactly `count` sites. Produces at most
// marginals.size() atoms.
MixedStrategy bvn_decompose(std::span<const double> marginals, int count, double eps = 1e-9);

// Number of pure profiles when every player picks r[i] distinct sites.
boost::multiprecision::cpp_int normal_form_size(const CEGame& game);

}  // namespace cegame
