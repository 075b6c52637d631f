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
#include <string>
#include <string_view>
#include <vector>

#include "cegame/core.hpp"
#include "cegame/errors.hpp"

namespace cegame::nash {

enum class Phase { kRealloc, kIncreaseSuccess, kIncreaseFail, kReroute };

std::string_view phase_name(Phase phase);

struct IterationTrace {
  std::size_t step = 0;
  Phase phase = Phase::kRealloc;
  double delta = 0.0;
  std::optional<double> theta0;  // after the phase; empty once every catcher site is full
  double catcher_allocated = 0.0;
  std::vector<bool> boundary_open;
  std::vector<std::size_t> entered_boundary;
};

// Counts of per-phase invariant breaches observed while solving with
// SolveOptions::check_lemmas. All zero on a healthy run.
struct LemmaAudit {
  std::size_t realloc_changed_view = 0;  // reallocation moved mu, theta, catcher or site totals
  std::size_t threshold_rate = 0;        // evader thresholds did not drop by delta * rate
  std::size_t reroute_no_decrease = 0;   // rerouting with delta > 0 did not lower theta0
  std::size_t repeated_entry = 0;        // a site entered the open boundary twice
  std::size_t repeated_failure = 0;      // two failed increases with no new open site between
  std::size_t equilibrium_lost = 0;      // verify_equilibrium failed after a phase
  std::vector<std::string> messages;

  std::size_t total() const {
    return realloc_changed_view + threshold_rate + reroute_no_decrease + repeated_entry +
           repeated_failure + equilibrium_lost;
  }
};

struct SolveOptions {
  double eps = 1e-9;          // set membership and flow comparisons
  double verify_eps = 1e-6;   // final and per-phase equilibrium checks
  std::size_t max_iterations = 1'000'000;
  bool trace = false;
  bool check_lemmas = false;
  std::size_t stall_limit = 3;
  double stall_delta = 1e-12;
};

struct NashSolution {
  StrategyProfile profile;
  std::vector<IterationTrace> trace;
  std::size_t iterations = 0;
  EquilibriumReport verified;
  LemmaAudit audit;
};

class IterationLimitExceeded : public NumericDegeneracy {
 public:
  IterationLimitExceeded(const std::string& what, std::vector<IterationTrace> trace)
      : NumericDegeneracy(what), trace_(std::move(trace)) {}
  const std::vector<IterationTrace>& trace() const { return trace_; }

 private:
  std::vector<IterationTrace> trace_;
};

// Equilibrium of the game with no catcher resource: each evader fills its
// highest base-utility sites first.
StrategyProfile initialize_evaders(const CEGame& game);

// Moves evader resource along active edges to a min-cost flow with edge
// costs log(-d). Catcher allocation, site totals, per-resource utilities
// and thresholds are unchanged; afterwards no negative residual cycle
// exists among active edges.
StrategyProfile reallocate_min_cost(const CEGame& game, const StrategyProfile& profile,
                                    double eps = 1e-9);

struct IncreaseOutcome {
  bool success = false;
  double delta = 0.0;
  std::optional<std::size_t> start_site;
  std::vector<double> site_rate;    // gamma per site
  std::vector<double> evader_rate;  // gamma per evader, index 0 unused
  StrategyProfile profile;
};

// Raises catcher coverage on open boundary sites reachable from the first
// open site whose residual reach stays inside the open boundary. Fails when
// no such site exists.
IncreaseOutcome increase_coverage(const CEGame& game, const StrategyProfile& profile,
                                  double eps = 1e-9);

struct RerouteOutcome {
  double delta = 0.0;  // drop of theta0; zero means nothing moved
  StrategyProfile profile;
};

// Pushes evader resource away from open boundary sites through the
// residual graph so that theta0 drops by the largest delta for which a
// max flow saturates every source edge.
RerouteOutcome reroute_decrease_theta0(const CEGame& game, const StrategyProfile& profile,
                                       double eps = 1e-9);

// Upper bound 2m + 4m * 3^(n m) on main-loop iterations, saturated at the
// largest size_t.
std::size_t iteration_bound(std::size_t num_evaders, std::size_t num_sites);

NashSolution solve_nash(const CEGame& game, const SolveOptions& options = {});

}  // namespace cegame::nash
