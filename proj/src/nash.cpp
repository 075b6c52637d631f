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

#include "cegame/nash.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cegame/flow.hpp"

namespace cegame::nash {

std::string_view phase_name(Phase phase) {
  switch (phase) {
    case Phase::kRealloc:
      return "realloc";
    case Phase::kIncreaseSuccess:
      return "increase-success";
    case Phase::kIncreaseFail:
      return "increase-fail";
    case Phase::kReroute:
      return "reroute";
  }
  return "unknown";
}

namespace {

// Evaders and sites as flow nodes: evader i -> i-1, site s -> n+s, then the
// source and the sink.
struct ActiveNetwork {
  flow::FlowNetwork net;
  std::vector<std::pair<std::size_t, std::size_t>> cell;  // edge id -> (evader, site), or (0, 0) for terminals
  std::size_t num_evaders;

  std::size_t evader_node(std::size_t evader) const { return evader - 1; }
  std::size_t site_node(std::size_t site) const { return num_evaders + site; }
  bool is_site(std::size_t node) const { return node >= num_evaders && node < net.source(); }
};

ActiveNetwork build_active_network(const CEGame& game, const StrategyProfile& profile,
                                   const ProfileView& view, bool with_terminals) {
  const std::size_t n = game.num_evaders();
  const std::size_t m = game.num_sites();
  ActiveNetwork out{flow::FlowNetwork(n + m + 2, n + m, n + m + 1), {}, n};
  std::vector<double> evader_mass(n + 1, 0.0);
  std::vector<double> site_mass(m, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t s = 0; s < m; ++s) {
      if (!view.active(i, s)) continue;
      const double limit = game.limit(i, s);
      const double x = std::clamp(profile.x(i, s), 0.0, limit);
      const auto id = out.net.add_edge(out.evader_node(i), out.site_node(s), limit,
                                       std::log(-game.d(i, s)));
      out.net.set_flow(id, x);
      out.cell.emplace_back(i, s);
      evader_mass[i] += x;
      site_mass[s] += x;
    }
  }
  if (with_terminals) {
    for (std::size_t i = 1; i <= n; ++i) {
      const auto id = out.net.add_edge(out.net.source(), out.evader_node(i), evader_mass[i]);
      out.net.set_flow(id, evader_mass[i]);
      out.cell.emplace_back(0, 0);
    }
    for (std::size_t s = 0; s < m; ++s) {
      const auto id = out.net.add_edge(out.site_node(s), out.net.sink(), site_mass[s]);
      out.net.set_flow(id, site_mass[s]);
      out.cell.emplace_back(0, 0);
    }
  }
  return out;
}

// Removes rounding residue: tiny negatives and overshoots of a limit.
void snap_row(const CEGame& game, Matrix& x, std::size_t player) {
  for (std::size_t s = 0; s < game.num_sites(); ++s) {
    const double limit = game.limit(player, s);
    double& v = x(player, s);
    if (v < 1e-14) v = 0.0;
    if (v > limit - 1e-14 * std::max(1.0, limit)) v = limit;
  }
}

}  // namespace

StrategyProfile initialize_evaders(const CEGame& game) {
  require_valid(game);
  StrategyProfile profile = zero_profile(game);
  const std::vector<double> no_coverage(game.num_sites(), 0.0);
  for (std::size_t i = 1; i < game.num_players(); ++i) {
    const auto alloc = best_response(game, no_coverage, i);
    std::copy(alloc.begin(), alloc.end(), profile.x.row(i).begin());
  }
  return profile;
}

StrategyProfile reallocate_min_cost(const CEGame& game, const StrategyProfile& profile,
                                    double eps) {
  const ProfileView view = profile_view(game, profile, Tolerance{eps}, eps);
  ActiveNetwork active = build_active_network(game, profile, view, /*with_terminals=*/true);
  try {
    flow::min_cost_flow(active.net, eps);
  } catch (const InfeasibleError& e) {
    throw Error(std::string("reallocate_min_cost: current allocation is not a saturating flow: ") +
                e.what());
  }

  StrategyProfile out = profile;
  for (std::size_t id = 0; id < active.cell.size(); ++id) {
    const auto [i, s] = active.cell[id];
    if (i == 0) continue;
    out.x(i, s) = active.net.edge(id).flow;
  }
  for (std::size_t i = 1; i < game.num_players(); ++i) snap_row(game, out.x, i);
  return out;
}

IncreaseOutcome increase_coverage(const CEGame& game, const StrategyProfile& profile,
                                  double eps) {
  const std::size_t n = game.num_evaders();
  const std::size_t m = game.num_sites();
  const ProfileView view = profile_view(game, profile, Tolerance{eps}, eps);

  IncreaseOutcome out;
  out.profile = profile;
  const std::vector<std::size_t> open = view.open_sites();
  if (open.empty()) return out;

  const ActiveNetwork active = build_active_network(game, profile, view, /*with_terminals=*/false);
  const flow::ResidualGraph residual(active.net, eps);

  std::vector<double> dist;
  for (std::size_t start : open) {
    auto candidate = flow::shortest_paths(residual, active.site_node(start));
    bool contained = true;
    for (std::size_t s = 0; s < m && contained; ++s) {
      if (candidate[active.site_node(s)] < flow::kInfinity && !view.open_boundary[s]) {
        contained = false;
      }
    }
    if (contained) {
      out.start_site = start;
      dist = std::move(candidate);
      break;
    }
  }
  if (!out.start_site) return out;

  auto rate = [](double distance) {
    return distance == flow::kInfinity ? 0.0 : std::exp(-distance);
  };
  out.site_rate.assign(m, 0.0);
  out.evader_rate.assign(n + 1, 0.0);
  double rate_total = 0.0;
  for (std::size_t s = 0; s < m; ++s) {
    out.site_rate[s] = rate(dist[active.site_node(s)]);
    rate_total += out.site_rate[s];
  }
  for (std::size_t i = 1; i <= n; ++i) out.evader_rate[i] = rate(dist[active.evader_node(i)]);

  const Matrix& x = profile.x;
  double delta = (game.resource[kCatcher] - x.row_sum(kCatcher)) / rate_total;
  for (std::size_t s = 0; s < m; ++s) {
    const double gamma = out.site_rate[s];
    if (gamma > 0.0) delta = std::min(delta, (game.limit(kCatcher, s) - x(kCatcher, s)) / gamma);
    // Inactive edges: stop where the per-resource utility meets the
    // (moving) threshold. Equal rates never meet and are skipped.
    for (std::size_t i = 1; i <= n; ++i) {
      if (!view.theta[i] || view.active(i, s)) continue;
      const double denom = gamma * -game.d(i, s) - out.evader_rate[i];
      if (denom == 0.0) continue;
      const double bound = (view.mu(i, s) - *view.theta[i]) / denom;
      if (bound > 0.0) delta = std::min(delta, bound);
    }
  }
  delta = std::max(delta, 0.0);

  for (std::size_t s = 0; s < m; ++s) {
    const double gamma = out.site_rate[s];
    if (gamma == 0.0) continue;
    const double limit = game.limit(kCatcher, s);
    double& v = out.profile.x(kCatcher, s);
    v += delta * gamma;
    if (v > limit - 1e-12 * std::max(1.0, limit)) v = limit;
  }
  out.success = true;
  out.delta = delta;
  return out;
}

RerouteOutcome reroute_decrease_theta0(const CEGame& game, const StrategyProfile& profile,
                                       double eps) {
  const std::size_t n = game.num_evaders();
  const std::size_t m = game.num_sites();
  const Tolerance tol{eps};
  const ProfileView view = profile_view(game, profile, tol, eps);

  RerouteOutcome out{0.0, profile};
  if (!view.theta[kCatcher]) return out;
  const double theta0 = *view.theta[kCatcher];
  const std::vector<std::size_t> open = view.open_sites();
  if (open.empty()) return out;

  // Largest candidate drop: the gap to the nearest site below theta0, and
  // no more than the evader mass present on each open site can carry.
  double upper = flow::kInfinity;
  for (std::size_t s = 0; s < m; ++s) {
    const double mu = view.mu(kCatcher, s);
    if (tol.below(mu, theta0)) upper = std::min(upper, theta0 - mu);
  }
  double inverse_rate = 0.0;
  for (std::size_t s : open) {
    upper = std::min(upper, game.d(kCatcher, s) * profile.evader_total(s));
    inverse_rate += 1.0 / game.d(kCatcher, s);
  }
  if (!(upper > 0.0)) return out;

  double unbounded = 1.0;
  for (std::size_t i = 1; i <= n; ++i) unbounded += game.resource[i];

  const ActiveNetwork active = build_active_network(game, profile, view, /*with_terminals=*/false);
  const auto arcs = flow::ResidualGraph(active.net, eps).arcs();
  const std::size_t source = active.net.source();
  const std::size_t sink = active.net.sink();

  auto build = [&](double delta) {
    flow::FlowNetwork g(active.net.num_nodes(), source, sink);
    for (const auto& arc : arcs) g.add_edge(arc.from, arc.to, arc.residual);
    for (std::size_t s = 0; s < m; ++s) {
      const double d0 = game.d(kCatcher, s);
      if (view.open_boundary[s]) {
        g.add_edge(source, active.site_node(s), delta / d0);
      } else {
        const double mu = view.mu(kCatcher, s);
        const double cap = tol.below(mu, theta0) ? std::max(0.0, (theta0 - delta - mu) / d0)
                                                 : unbounded;
        g.add_edge(active.site_node(s), sink, cap);
      }
    }
    return g;
  };
  auto feasible = [&](double delta, double slack) {
    flow::FlowNetwork g = build(delta);
    const double demand = delta * inverse_rate;
    const double value = flow::max_flow(g, 1e-13);
    return value >= demand - slack * std::max(1.0, demand);
  };

  // The search runs to the resolution of a double: stopping earlier leaves
  // residue on arcs that should have saturated, and residue above the set
  // tolerance later reads as live residual capacity.
  double lo = 0.0;
  double hi = upper;
  const double width = 4 * std::numeric_limits<double>::epsilon() * std::max(1.0, upper);
  if (feasible(hi, 1e-11)) {
    lo = hi;
  } else {
    while (hi - lo > width) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      (feasible(mid, 1e-11) ? lo : hi) = mid;
    }
    // Land exactly on the event that ends the search when it is within reach.
    if (upper - lo <= 10 * width && feasible(upper, 1e-9)) lo = upper;
  }
  if (lo <= 0.0) return out;

  flow::FlowNetwork g = build(lo);
  flow::max_flow(g, 1e-13);
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const double moved = g.edge(k).flow;
    if (moved == 0.0) continue;
    const auto [i, s] = active.cell[arcs[k].edge];
    out.profile.x(i, s) += arcs[k].forward ? moved : -moved;
  }
  for (std::size_t i = 1; i <= n; ++i) snap_row(game, out.profile.x, i);
  out.delta = lo;
  return out;
}

std::size_t iteration_bound(std::size_t num_evaders, std::size_t num_sites) {
  const long double m = static_cast<long double>(num_sites);
  const long double bound =
      2 * m + 4 * m * std::pow(3.0L, static_cast<long double>(num_evaders * num_sites));
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  if (!(bound < static_cast<long double>(kMax))) return kMax;
  return static_cast<std::size_t>(bound);
}

namespace {

class Solver {
 public:
  Solver(const CEGame& game, const SolveOptions& options)
      : game_(game), options_(options), tol_{options.eps}, entries_(game.num_sites(), 0) {}

  NashSolution run() {
    NashSolution sol;
    sol.profile = initialize_evaders(game_);
    const double target = game_.resource[kCatcher];
    const double done = target - options_.eps * std::max(1.0, target);
    const std::size_t cap = std::min(options_.max_iterations,
                                     iteration_bound(game_.num_evaders(), game_.num_sites()));

    snapshot(sol.profile);
    std::size_t stalls = 0;
    bool failed_without_new_site = false;
    while (sol.profile.x.row_sum(kCatcher) < done) {
      if (sol.iterations >= cap) {
        throw IterationLimitExceeded(
            "solve_nash: exceeded " + std::to_string(cap) + " iterations", std::move(sol.trace));
      }
      ++sol.iterations;

      const StrategyProfile before = sol.profile;
      sol.profile = reallocate_min_cost(game_, sol.profile, options_.eps);
      if (options_.check_lemmas) audit_realloc(before, sol.profile, sol);
      record(sol, Phase::kRealloc, 0.0);

      const ProfileView pre = view(sol.profile);
      IncreaseOutcome inc = increase_coverage(game_, sol.profile, options_.eps);
      double applied = 0.0;
      if (inc.success) {
        sol.profile = std::move(inc.profile);
        if (options_.check_lemmas) audit_increase(pre, sol.profile, inc, sol.audit);
        record(sol, Phase::kIncreaseSuccess, inc.delta);
        applied = inc.delta;
        failed_without_new_site = false;
      } else {
        record(sol, Phase::kIncreaseFail, 0.0);
        if (options_.check_lemmas && failed_without_new_site) {
          note(sol.audit, sol.audit.repeated_failure,
               "iteration " + std::to_string(sol.iterations) +
                   ": increase failed twice without a new open site");
        }
        RerouteOutcome rr = reroute_decrease_theta0(game_, sol.profile, options_.eps);
        sol.profile = std::move(rr.profile);
        const bool entered = record(sol, Phase::kReroute, rr.delta);
        failed_without_new_site = !entered;
        if (options_.check_lemmas && rr.delta > 0.0) {
          const auto theta_after = view(sol.profile).theta[kCatcher];
          if (theta_after && !(*theta_after < pre.catcher_threshold())) {
            note(sol.audit, sol.audit.reroute_no_decrease,
                 "iteration " + std::to_string(sol.iterations) + ": theta0 did not drop");
          }
        }
        applied = rr.delta;
      }

      stalls = applied <= options_.stall_delta ? stalls + 1 : 0;
      if (stalls >= options_.stall_limit) {
        throw NumericDegeneracy("solve_nash: no progress in " + std::to_string(stalls) +
                                " consecutive iterations");
      }
    }
    for (std::size_t s = 0; s < game_.num_sites(); ++s) {
      double& v = sol.profile.x(kCatcher, s);
      const double limit = game_.limit(kCatcher, s);
      if (v > limit - options_.eps) v = limit;
    }
    sol.verified = verify_equilibrium(game_, sol.profile, options_.verify_eps);
    return sol;
  }

 private:
  // Intermediate profiles are equilibria of the game in which the catcher
  // owns only what it has placed so far.
  bool partial_equilibrium(const StrategyProfile& profile) const {
    CEGame partial = game_;
    partial.resource[kCatcher] = profile.x.row_sum(kCatcher);
    return verify_equilibrium(partial, profile, options_.verify_eps).is_equilibrium;
  }

  ProfileView view(const StrategyProfile& profile) const {
    return profile_view(game_, profile, tol_, options_.eps);
  }

  void snapshot(const StrategyProfile& profile) {
    open_ = view(profile).open_boundary;
    for (std::size_t s = 0; s < open_.size(); ++s) entries_[s] += open_[s] ? 1 : 0;
  }

  static void note(LemmaAudit& audit, std::size_t& counter, std::string message) {
    ++counter;
    if (audit.messages.size() < 64) audit.messages.push_back(std::move(message));
  }

  // Updates the open-boundary snapshot and returns whether a site entered.
  bool record(NashSolution& sol, Phase phase, double delta) {
    const ProfileView v = view(sol.profile);
    std::vector<std::size_t> entered;
    for (std::size_t s = 0; s < open_.size(); ++s) {
      if (v.open_boundary[s] && !open_[s]) {
        entered.push_back(s);
        if (++entries_[s] > 1 && options_.check_lemmas) {
          note(sol.audit, sol.audit.repeated_entry,
               "iteration " + std::to_string(sol.iterations) + ": site " + std::to_string(s) +
                   " entered the open boundary again");
        }
      }
    }
    open_ = v.open_boundary;
    if (options_.check_lemmas && !partial_equilibrium(sol.profile)) {
      note(sol.audit, sol.audit.equilibrium_lost,
           "iteration " + std::to_string(sol.iterations) + ": not an equilibrium after " +
               std::string(phase_name(phase)));
    }
    if (options_.trace) {
      sol.trace.push_back({sol.iterations, phase, delta, v.theta[kCatcher],
                           sol.profile.x.row_sum(kCatcher), v.open_boundary, entered});
    }
    return !entered.empty();
  }

  void audit_realloc(const StrategyProfile& before, const StrategyProfile& after,
                     NashSolution& sol) {
    const ProfileView a = view(before);
    const ProfileView b = view(after);
    constexpr double kTol = 1e-9;
    bool changed = false;
    for (std::size_t s = 0; s < game_.num_sites(); ++s) {
      changed |= std::abs(before.x(kCatcher, s) - after.x(kCatcher, s)) > kTol;
      changed |= std::abs(before.evader_total(s) - after.evader_total(s)) > kTol;
      for (std::size_t i = 0; i < game_.num_players(); ++i) {
        changed |= std::abs(a.mu(i, s) - b.mu(i, s)) > kTol;
        changed |= a.boundary[i][s] != b.boundary[i][s];
      }
    }
    for (std::size_t i = 0; i < game_.num_players(); ++i) {
      changed |= a.theta[i].has_value() != b.theta[i].has_value();
      if (a.theta[i] && b.theta[i]) changed |= std::abs(*a.theta[i] - *b.theta[i]) > kTol;
    }
    if (changed) {
      note(sol.audit, sol.audit.realloc_changed_view,
           "iteration " + std::to_string(sol.iterations) +
               ": reallocation changed the profile view");
    }
  }

  void audit_increase(const ProfileView& pre, const StrategyProfile& after,
                      const IncreaseOutcome& inc, LemmaAudit& audit) {
    const ProfileView post = view(after);
    for (std::size_t i = 1; i < game_.num_players(); ++i) {
      if (!pre.theta[i] || !post.theta[i]) continue;
      const double expected = *pre.theta[i] - inc.delta * inc.evader_rate[i];
      if (std::abs(*post.theta[i] - expected) > 1e-7) {
        note(audit, audit.threshold_rate,
             "evader " + std::to_string(i) + ": threshold " + std::to_string(*post.theta[i]) +
                 " expected " + std::to_string(expected));
      }
    }
  }

  const CEGame& game_;
  SolveOptions options_;
  Tolerance tol_;
  std::vector<bool> open_;
  std::vector<std::size_t> entries_;
};

}  // namespace

NashSolution solve_nash(const CEGame& game, const SolveOptions& options) {
  require_valid(game);
  return Solver(game, options).run();
}

}  // namespace cegame::nash
