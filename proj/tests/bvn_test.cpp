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

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cegame/core.hpp"
#include "cegame/errors.hpp"

namespace cegame {
namespace {

void expect_recomposes(const std::vector<double>& marginals, int count) {
  const auto mixed = bvn_decompose(marginals, count);
  double mass = 0.0;
  for (const auto& atom : mixed.atoms) {
    EXPECT_EQ(atom.sites.size(), static_cast<std::size_t>(count));
    EXPECT_GE(atom.probability, 0.0);
    mass += atom.probability;
  }
  EXPECT_NEAR(mass, 1.0, 1e-9);
  EXPECT_LE(mixed.atoms.size(), std::max<std::size_t>(1, marginals.size()));
  const auto back = mixed.marginals(marginals.size());
  for (std::size_t s = 0; s < marginals.size(); ++s) EXPECT_NEAR(back[s], marginals[s], 1e-9);
}

TEST(Bvn, DegenerateMarginals) {
  const auto mixed = bvn_decompose(std::vector<double>{1.0, 0.0, 0.0}, 1);
  ASSERT_EQ(mixed.atoms.size(), 1u);
  EXPECT_EQ(mixed.atoms[0].sites, (std::vector<std::size_t>{0}));
  EXPECT_DOUBLE_EQ(mixed.atoms[0].probability, 1.0);
}

TEST(Bvn, EvenSplit) {
  const auto mixed = bvn_decompose(std::vector<double>{0.5, 0.5}, 1);
  ASSERT_EQ(mixed.atoms.size(), 2u);
  EXPECT_DOUBLE_EQ(mixed.atoms[0].probability, 0.5);
  EXPECT_DOUBLE_EQ(mixed.atoms[1].probability, 0.5);
}

TEST(Bvn, ThreeSitesPickTwo) { expect_recomposes({0.6, 0.9, 0.5}, 2); }

TEST(Bvn, EmptyAndFullAssignments) {
  expect_recomposes({0.0, 0.0, 0.0}, 0);
  expect_recomposes({1.0, 1.0}, 2);
}

TEST(Bvn, RejectsBadInput) {
  EXPECT_THROW(bvn_decompose(std::vector<double>{0.5, 0.6}, 1), InfeasibleError);
  EXPECT_THROW(bvn_decompose(std::vector<double>{1.5, -0.5}, 1), InfeasibleError);
  EXPECT_THROW(bvn_decompose(std::vector<double>{0.5, 0.5}, 3), InfeasibleError);
}

TEST(Bvn, RandomMarginals) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + rng() % 12;
    const int count = static_cast<int>(rng() % (m + 1));
    // Start from a random mixture of count-subsets so the marginals are feasible.
    std::vector<double> marginals(m, 0.0);
    const int parts = 1 + static_cast<int>(rng() % 5);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    std::vector<double> weights(parts);
    double sum = 0.0;
    for (auto& w : weights) sum += (w = unit(rng));
    for (int k = 0; k < parts; ++k) {
      std::vector<std::size_t> idx(m);
      std::iota(idx.begin(), idx.end(), 0);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (int j = 0; j < count; ++j) marginals[idx[j]] += weights[k] / sum;
    }
    for (auto& v : marginals) v = std::min(v, 1.0);
    expect_recomposes(marginals, count);
  }
}

}  // namespace
}  // namespace cegame
