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
#include <vector>

#include "cegame/core.hpp"

namespace cegame {

struct StackelbergSolution {
  std::vector<double> coverage;
  std::size_t attacked_site = 0;
  double catcher_utility = 0.0;
  double evader_utility = 0.0;
};

// Optimal catcher commitment when a single evader can put its whole
// resource on any one site (l[1][s] >= r[1] everywhere). The evader's
// ties are broken in the catcher's favor. Throws UnsupportedInstance for
// any other game; those cases are NP-hard.
StackelbergSolution solve_stackelberg(const CEGame& game);

}  // namespace cegame
