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

#include <algorithm>
#include <numeric>

#include "cegame/core.hpp"
#include "cegame/errors.hpp"

namespace cegame {

std::vector<double> MixedStrategy::marginals(std::size_t num_sites) const {
  std::vector<double> out(num_sites, 0.0);
  for (const auto& atom : atoms) {
    for (std::size_t s : atom.sites) out[s] += atom.probability;
  }
  return out;
}

// Peels off one pure assignment at a time. The residual marginals q and the
// residual weight w keep sum(q) == count * w and q[s] <= w. Each step picks
// the `count` largest residuals and removes as much weight as possible: it
// stops when a picked site hits zero or an unpicked site becomes tight
// (q == w). Every site triggers at most one of those events, which bounds
// the atom count by the number of sites.
MixedStrategy bvn_decompose(std::span<const double> marginals, int count, double eps) {
  const std::size_t m = marginals.size();
  if (count < 0 || static_cast<std::size_t>(count) > m) {
    throw InfeasibleError("bvn_decompose: assignment size outside [0, number of sites]");
  }
  double total = 0.0;
  for (double p : marginals) {
    if (p < -eps || p > 1.0 + eps) throw InfeasibleError("bvn_decompose: marginal outside [0, 1]");
    total += p;
  }
  if (std::abs(total - count) > eps * std::max(1.0, static_cast<double>(count))) {
    throw InfeasibleError("bvn_decompose: marginals do not sum to the assignment size");
  }

  MixedStrategy mixed;
  const auto k = static_cast<std::size_t>(count);
  if (k == 0 || k == m) {
    std::vector<std::size_t> all;
    if (k == m) {
      all.resize(m);
      std::iota(all.begin(), all.end(), 0);
    }
    mixed.atoms.push_back({std::move(all), 1.0});
    return mixed;
  }

  constexpr double kResidualFloor = 1e-13;
  std::vector<double> q(m);
  for (std::size_t s = 0; s < m; ++s) q[s] = std::clamp(marginals[s], 0.0, 1.0);
  double weight = 1.0;
  std::vector<std::size_t> order(m);

  while (weight > kResidualFloor && mixed.atoms.size() < 2 * m) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t l, std::size_t r) { return q[l] > q[r]; });
    const double smallest_picked = q[order[k - 1]];
    const double largest_unpicked = q[order[k]];
    double step = std::min(smallest_picked, weight - largest_unpicked);
    // Rounding can leave a sliver; the last atom absorbs it.
    if (step <= kResidualFloor) step = weight;

    std::vector<std::size_t> chosen(order.begin(), order.begin() + static_cast<long>(k));
    std::sort(chosen.begin(), chosen.end());
    for (std::size_t s : chosen) q[s] = std::max(0.0, q[s] - step);
    weight -= step;
    mixed.atoms.push_back({std::move(chosen), step});
  }
  if (weight > 0.0 && !mixed.atoms.empty()) mixed.atoms.back().probability += weight;
  return mixed;
}

}  // namespace cegame
