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

#include <algorithm>
#include <cmath>
#include <optional>

#include "cegame/errors.hpp"

namespace cegame {

namespace {

constexpr std::size_t kEvader = 1;

// Fixing the attacked site t and its coverage, every other site s needs
// coverage at least lower(s) so that the evader still weakly prefers t.
// The bounds grow with the coverage on t, so the admissible coverages form
// an interval starting at the smallest value that fits the resource.
class TargetProblem {
 public:
  TargetProblem(const CEGame& game, std::size_t target) : game_(game), target_(target) {}

  double lower(std::size_t site, double coverage) const {
    const double gap = game_.b(kEvader, site) - game_.b(kEvader, target_) -
                       game_.d(kEvader, target_) * coverage;
    return std::max(0.0, gap / -game_.d(kEvader, site));
  }

  bool admissible(double coverage) const {
    double used = coverage;
    for (std::size_t s = 0; s < game_.num_sites(); ++s) {
      if (s == target_) continue;
      const double need = lower(s, coverage);
      if (need > game_.limit(kCatcher, s) + kSlack) return false;
      used += need;
    }
    return used <= game_.resource[kCatcher] + kSlack;
  }

  // Coverage on the target that maximizes the catcher's utility, if any.
  std::optional<double> best_coverage() const {
    double others = 0.0;
    for (std::size_t s = 0; s < game_.num_sites(); ++s) {
      if (s != target_) others += game_.limit(kCatcher, s);
    }
    const double lo = std::max(0.0, game_.resource[kCatcher] - others);
    double hi = std::min(game_.limit(kCatcher, target_), game_.resource[kCatcher]);
    if (lo > hi + kSlack || !admissible(lo)) return std::nullopt;
    hi = std::max(lo, hi);
    if (!admissible(hi)) {
      double left = lo;
      double right = hi;
      for (int k = 0; k < 200; ++k) {
        const double mid = 0.5 * (left + right);
        if (mid == left || mid == right) break;
        (admissible(mid) ? left : right) = mid;
      }
      hi = left;
    }

    // value() is concave on [lo, hi]: it is the optimum of a linear program
    // in which the target coverage enters linearly.
    constexpr double kGolden = 0.6180339887498949;
    double left = lo;
    double right = hi;
    for (int k = 0; k < 300 && right - left > 1e-15 * std::max(1.0, hi); ++k) {
      const double m1 = right - kGolden * (right - left);
      const double m2 = left + kGolden * (right - left);
      if (value(m1) < value(m2)) {
        left = m1;
      } else {
        right = m2;
      }
    }
    double best = 0.5 * (left + right);
    for (double end : {lo, hi}) {
      if (value(end) >= value(best)) best = end;
    }
    return best;
  }

  // Lower bounds first, then the spare resource on the sites the catcher
  // values most per unit.
  std::vector<double> coverage(double on_target) const {
    const std::size_t m = game_.num_sites();
    std::vector<double> out(m, 0.0);
    out[target_] = on_target;
    double used = on_target;
    std::vector<std::size_t> order;
    for (std::size_t s = 0; s < m; ++s) {
      if (s == target_) continue;
      out[s] = std::min(lower(s, on_target), game_.limit(kCatcher, s));
      used += out[s];
      order.push_back(s);
    }
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
      return game_.b(kCatcher, l) > game_.b(kCatcher, r);
    });
    double spare = game_.resource[kCatcher] - used;
    for (std::size_t s : order) {
      if (spare <= 0.0) break;
      const double add = std::min(spare, game_.limit(kCatcher, s) - out[s]);
      out[s] += add;
      spare -= add;
    }
    return out;
  }

  double value(double on_target) const {
    const auto cover = coverage(on_target);
    double total = (game_.b(kCatcher, target_) +
                    game_.d(kCatcher, target_) * game_.resource[kEvader]) * on_target;
    for (std::size_t s = 0; s < game_.num_sites(); ++s) {
      if (s != target_) total += game_.b(kCatcher, s) * cover[s];
    }
    return total;
  }

 private:
  static constexpr double kSlack = 1e-12;
  const CEGame& game_;
  std::size_t target_;
};

}  // namespace

StackelbergSolution solve_stackelberg(const CEGame& game) {
  require_valid(game);
  if (game.num_evaders() != 1) {
    throw UnsupportedInstance(
        "solve_stackelberg: only single-evader games are supported; with several evaders "
        "computing a Stackelberg strategy is strongly NP-hard");
  }
  for (std::size_t s = 0; s < game.num_sites(); ++s) {
    if (game.limit(kEvader, s) < game.resource[kEvader]) {
      throw UnsupportedInstance(
          "solve_stackelberg: the evader must be able to put its whole resource on any site; "
          "otherwise computing a Stackelberg strategy is NP-hard");
    }
  }

  const std::size_t m = game.num_sites();
  std::optional<StackelbergSolution> best;
  for (std::size_t target = 0; target < m; ++target) {
    const TargetProblem problem(game, target);
    const auto on_target = problem.best_coverage();
    if (!on_target) continue;

    StrategyProfile profile = zero_profile(game);
    const auto cover = problem.coverage(*on_target);
    std::copy(cover.begin(), cover.end(), profile.x.row(kCatcher).begin());
    profile.x(kEvader, target) = game.resource[kEvader];

    StackelbergSolution candidate{cover, target, player_utility(game, profile, kCatcher),
                                  player_utility(game, profile, kEvader)};
    if (!best || candidate.catcher_utility > best->catcher_utility + 1e-12) {
      best = std::move(candidate);
    }
  }
  if (!best) throw InfeasibleError("solve_stackelberg: no feasible commitment found");

  // Push the rounding residue of the resource sum onto a site with room.
  double total = 0.0;
  for (double v : best->coverage) total += v;
  double residue = game.resource[kCatcher] - total;
  for (std::size_t s = 0; s < m && residue != 0.0; ++s) {
    if (s == best->attacked_site) continue;
    const double next = std::clamp(best->coverage[s] + residue, 0.0, game.limit(kCatcher, s));
    residue -= next - best->coverage[s];
    best->coverage[s] = next;
  }
  return *best;
}

}  // namespace cegame
