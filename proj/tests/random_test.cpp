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

#include "cegame/random.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "cegame/bench.hpp"

namespace cegame {
namespace {

TEST(SplitMix64, ReferenceStream) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next(), 0x6e789e6aa1b965f4ULL);
}

TEST(SplitMix64, UniformIntStaysInRange) {
  SplitMix64 rng(42);
  std::vector<int> hits(10, 0);
  for (int k = 0; k < 10000; ++k) {
    const auto v = rng.uniform_int(1, 10);
    ASSERT_GE(v, 1);
    ASSERT_LE(v, 10);
    ++hits[static_cast<std::size_t>(v - 1)];
  }
  for (int h : hits) EXPECT_GT(h, 800);
}

TEST(SplitMix64, Uniform01) {
  SplitMix64 rng(9);
  for (int k = 0; k < 1000; ++k) {
    const double u = rng.uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(GenRandom, DeterministicAndValid) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const CEGame g = gen_random(1 + seed % 5, 1 + seed % 7, seed);
    EXPECT_EQ(g, gen_random(1 + seed % 5, 1 + seed % 7, seed));
    EXPECT_TRUE(validate_game(g).empty());
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      EXPECT_GE(g.resource[i], 1.0);
      EXPECT_LE(g.resource[i], static_cast<double>(g.num_sites()));
      for (std::size_t s = 0; s < g.num_sites(); ++s) {
        EXPECT_GE(g.b(i, s), 1.0);
        EXPECT_LE(g.b(i, s), 10.0);
        EXPECT_GE(std::abs(g.d(i, s)), 1.0);
        EXPECT_LE(std::abs(g.d(i, s)), 10.0);
        EXPECT_EQ(g.limit(i, s), 1.0);
      }
    }
  }
  EXPECT_NE(gen_random(3, 3, 1), gen_random(3, 3, 2));
}

TEST(Bench, OrderedVerifiedRows) {
  const auto records = run_bench(2, 4, 3, 10, 2);
  ASSERT_EQ(records.size(), 9u);
  for (std::size_t k = 0; k < records.size(); ++k) {
    EXPECT_EQ(records[k].n, 2 + k / 3);
    EXPECT_EQ(records[k].m, records[k].n);
    EXPECT_EQ(records[k].seed, 10 + k % 3);
    EXPECT_TRUE(records[k].verified);
  }
  std::ostringstream csv;
  write_bench_csv(csv, records);
  EXPECT_EQ(csv.str().substr(0, csv.str().find('\n')),
            "n,m,seed,iterations,wall_time_ms,normal_form_size,verified");
}

TEST(Bench, CsvStableExceptTiming) {
  auto strip = [](std::vector<BenchRecord> r) {
    for (auto& x : r) x.wall_time_ms = 0.0;
    std::ostringstream out;
    write_bench_csv(out, r);
    return out.str();
  };
  EXPECT_EQ(strip(run_bench(2, 3, 2, 0, 1)), strip(run_bench(2, 3, 2, 0, 3)));
}

}  // namespace
}  // namespace cegame
