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

#include "cegame/core.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "cegame/errors.hpp"

namespace cegame {

CEGame make_game(std::size_t num_evaders, std::size_t num_sites) {
  CEGame game;
  const std::size_t players = num_evaders + 1;
  for (std::size_t s = 0; s < num_sites; ++s) game.sites.push_back("s" + std::to_string(s));
  game.evader_ids.assign(num_evaders, "");
  game.resource.assign(players, 0.0);
  game.limit = Matrix(players, num_sites, 1.0);
  game.a = Matrix(players, num_sites);
  game.b = Matrix(players, num_sites);
  game.c = Matrix(players, num_sites);
  game.d = Matrix(players, num_sites);
  return game;
}

StrategyProfile zero_profile(const CEGame& game) {
  return {Matrix(game.num_players(), game.num_sites())};
}

bool Tolerance::same(double mu, double theta) const {
  return std::abs(mu - theta) <= eps * std::max(1.0, std::abs(theta));
}

namespace {

bool shape_ok(const Matrix& m, std::size_t rows, std::size_t cols) {
  return m.rows() == rows && m.cols() == cols;
}

}  // namespace

std::vector<Violation> validate_game(const CEGame& game) {
  std::vector<Violation> out;
  const std::size_t players = game.num_players();
  const std::size_t sites = game.num_sites();

  if (sites == 0) out.push_back({"game has no sites", std::nullopt, std::nullopt});
  if (game.resource.size() != players) {
    out.push_back({"resource vector size does not match player count", std::nullopt, std::nullopt});
    return out;
  }
  const std::pair<const char*, const Matrix*> coefficients[] = {
      {"limit", &game.limit}, {"a", &game.a}, {"b", &game.b}, {"c", &game.c}, {"d", &game.d}};
  bool shapes = true;
  for (const auto& [name, m] : coefficients) {
    if (!shape_ok(*m, players, sites)) {
      out.push_back({std::string(name) + " matrix has wrong shape", std::nullopt, std::nullopt});
      shapes = false;
    }
  }
  if (game.edge_costs && !shape_ok(*game.edge_costs, game.num_evaders(), sites)) {
    out.push_back({"edge cost annotation has wrong shape", std::nullopt, std::nullopt});
  }
  if (!shapes) return out;

  for (std::size_t i = 0; i < players; ++i) {
    const double r = game.resource[i];
    if (!std::isfinite(r)) {
      out.push_back({"resource must be finite", i, std::nullopt});
    } else if (r < 0.0) {
      out.push_back({"resource must be nonnegative", i, std::nullopt});
    }
    double capacity = 0.0;
    for (std::size_t s = 0; s < sites; ++s) {
      for (const auto& [name, m] : coefficients) {
        if (!std::isfinite((*m)(i, s))) {
          out.push_back({std::string(name) + " coefficient must be finite", i, s});
        }
      }
      const double l = game.limit(i, s);
      if (l < 0.0) out.push_back({"limit must be nonnegative", i, s});
      capacity += std::max(0.0, l);
      const double delta = game.d(i, s);
      if (i == kCatcher && !(delta > 0.0)) {
        out.push_back({"catcher delta must be positive", i, s});
      } else if (i != kCatcher && !(delta < 0.0)) {
        out.push_back({"evader delta must be negative", i, s});
      }
    }
    if (r > capacity + 1e-9 * std::max(1.0, capacity)) {
      out.push_back({"infeasible resource: exceeds sum of limits", i, std::nullopt});
    }
  }
  return out;
}

void require_valid(const CEGame& game) {
  const auto violations = validate_game(game);
  if (violations.empty()) return;
  std::ostringstream msg;
  msg << "invalid game:";
  for (const auto& v : violations) {
    msg << ' ' << v.message;
    if (v.player) msg << " (player " << *v.player;
    if (v.site) msg << (v.player ? ", " : " (") << "site " << *v.site;
    if (v.player || v.site) msg << ')';
    msg << ';';
  }
  throw ValidationError(msg.str());
}

std::vector<std::size_t> ProfileView::open_sites() const {
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < open_boundary.size(); ++s) {
    if (open_boundary[s]) out.push_back(s);
  }
  return out;
}

double ProfileView::catcher_threshold() const {
  if (!theta[kCatcher]) throw Error("threshold undefined: every catcher site is saturated");
  return *theta[kCatcher];
}

double per_resource_utility(const CEGame& game, const StrategyProfile& profile,
                            std::size_t player, std::size_t site) {
  return game.b(player, site) + game.d(player, site) * profile.opponent(player, site);
}

ProfileView profile_view(const CEGame& game, const StrategyProfile& profile, Tolerance tol,
                         double zero_eps) {
  const std::size_t players = game.num_players();
  const std::size_t sites = game.num_sites();
  const Matrix& x = profile.x;

  ProfileView view;
  view.mu = Matrix(players, sites);
  view.theta.assign(players, std::nullopt);
  view.boundary.assign(players, std::vector<bool>(sites, false));
  view.positive_boundary.assign(players, std::vector<bool>(sites, false));
  view.open_boundary.assign(sites, false);

  std::vector<double> evader_total(sites, 0.0);
  for (std::size_t s = 0; s < sites; ++s) evader_total[s] = profile.evader_total(s);

  for (std::size_t i = 0; i < players; ++i) {
    for (std::size_t s = 0; s < sites; ++s) {
      const double opp = i == kCatcher ? evader_total[s] : x(kCatcher, s);
      view.mu(i, s) = game.b(i, s) + game.d(i, s) * opp;
    }
  }

  for (std::size_t s = 0; s < sites; ++s) {
    if (x(kCatcher, s) < game.limit(kCatcher, s) - zero_eps) {
      const double mu = view.mu(kCatcher, s);
      auto& theta = view.theta[kCatcher];
      if (!theta || mu > *theta) theta = mu;
    }
  }
  for (std::size_t i = 1; i < players; ++i) {
    for (std::size_t s = 0; s < sites; ++s) {
      if (x(i, s) > zero_eps) {
        const double mu = view.mu(i, s);
        auto& theta = view.theta[i];
        if (!theta || mu < *theta) theta = mu;
      }
    }
  }

  for (std::size_t i = 0; i < players; ++i) {
    if (!view.theta[i]) continue;
    for (std::size_t s = 0; s < sites; ++s) {
      if (!tol.same(view.mu(i, s), *view.theta[i])) continue;
      view.boundary[i][s] = true;
      if (i == kCatcher) {
        view.open_boundary[s] = x(kCatcher, s) < game.limit(kCatcher, s) - zero_eps;
      } else {
        view.positive_boundary[i][s] = x(i, s) > zero_eps;
      }
    }
  }
  return view;
}

double player_utility(const CEGame& game, const StrategyProfile& profile, std::size_t player) {
  double total = 0.0;
  for (std::size_t s = 0; s < game.num_sites(); ++s) {
    const double opp = profile.opponent(player, s);
    const double mu = game.b(player, s) + game.d(player, s) * opp;
    total += mu * profile.x(player, s) + game.a(player, s) * opp + game.c(player, s);
  }
  return total;
}

std::vector<double> best_response(const CEGame& game, std::span<const double> opponent,
                                  std::size_t player) {
  const std::size_t sites = game.num_sites();
  std::vector<double> mu(sites);
  double capacity = 0.0;
  for (std::size_t s = 0; s < sites; ++s) {
    mu[s] = game.b(player, s) + game.d(player, s) * opponent[s];
    capacity += game.limit(player, s);
  }
  double remaining = game.resource[player];
  if (remaining > capacity + 1e-9 * std::max(1.0, capacity)) {
    throw InfeasibleError("best_response: resource of player " + std::to_string(player) +
                          " exceeds the sum of its limits");
  }

  std::vector<std::size_t> order(sites);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return mu[l] > mu[r]; });

  std::vector<double> alloc(sites, 0.0);
  for (std::size_t s : order) {
    if (remaining <= 0.0) break;
    const double take = std::min(game.limit(player, s), remaining);
    alloc[s] = take;
    remaining -= take;
  }
  return alloc;
}

EquilibriumReport verify_equilibrium(const CEGame& game, const StrategyProfile& profile,
                                     double eps) {
  const std::size_t players = game.num_players();
  const std::size_t sites = game.num_sites();
  const Matrix& x = profile.x;
  const Tolerance tol{eps};

  EquilibriumReport report;
  report.players.resize(players);

  for (std::size_t i = 0; i < players; ++i) {
    double sum = 0.0;
    for (std::size_t s = 0; s < sites; ++s) {
      sum += x(i, s);
      report.feasibility_violation = std::max(report.feasibility_violation, -x(i, s));
      report.feasibility_violation =
          std::max(report.feasibility_violation, x(i, s) - game.limit(i, s));
    }
    report.feasibility_violation =
        std::max(report.feasibility_violation, std::abs(sum - game.resource[i]));
  }
  report.worst_violation = report.feasibility_violation;

  for (std::size_t i = 0; i < players; ++i) {
    std::vector<double> opp(sites);
    for (std::size_t s = 0; s < sites; ++s) opp[s] = profile.opponent(i, s);
    PlayerCheck& check = report.players[i];
    std::vector<double> response;
    try {
      response = best_response(game, opp, i);
    } catch (const InfeasibleError&) {
      check.utility_gap = std::numeric_limits<double>::infinity();
      report.worst_violation = check.utility_gap;
      continue;
    }

    std::vector<double> mu(sites);
    double scale = 1.0;
    for (std::size_t s = 0; s < sites; ++s) {
      mu[s] = game.b(i, s) + game.d(i, s) * opp[s];
      check.utility_gap += mu[s] * (response[s] - x(i, s));
      scale = std::max(scale, std::abs(mu[s]));
    }

    // Thresholds as defined for the current allocation, then the two
    // best-response conditions against them.
    std::optional<double> theta;
    for (std::size_t s = 0; s < sites; ++s) {
      const bool candidate = i == kCatcher ? x(i, s) < game.limit(i, s) - eps : x(i, s) > eps;
      if (!candidate) continue;
      if (!theta || (i == kCatcher ? mu[s] > *theta : mu[s] < *theta)) theta = mu[s];
    }
    if (theta) {
      for (std::size_t s = 0; s < sites; ++s) {
        if (tol.above(mu[s], *theta)) {
          check.structure_violation =
              std::max(check.structure_violation, game.limit(i, s) - x(i, s));
        } else if (tol.below(mu[s], *theta)) {
          check.structure_violation = std::max(check.structure_violation, x(i, s));
        }
      }
    }
    // The gap is compared relative to the largest per-resource utility so
    // that it measures misplaced allocation rather than utility units.
    report.worst_violation =
        std::max({report.worst_violation, check.utility_gap / scale, check.structure_violation});
  }
  report.is_equilibrium = report.worst_violation <= eps;
  return report;
}

boost::multiprecision::cpp_int normal_form_size(const CEGame& game) {
  using boost::multiprecision::cpp_int;
  const auto m = static_cast<long long>(game.num_sites());
  cpp_int total = 1;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const double r = game.resource[i];
    const double rounded = std::round(r);
    if (std::abs(r - rounded) > 1e-9 || rounded < 0 || rounded > static_cast<double>(m)) {
      throw ValidationError("normal_form_size: resource of player " + std::to_string(i) +
                            " is not an integer in [0, number of sites]");
    }
    const auto k = static_cast<long long>(rounded);
    cpp_int binom = 1;
    for (long long j = 1; j <= k; ++j) {
      binom *= m - k + j;
      binom /= j;
    }
    total *= binom;
  }
  return total;
}

}  // namespace cegame
