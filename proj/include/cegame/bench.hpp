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
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace cegame {

struct BenchRecord {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t iterations = 0;
  double wall_time_ms = 0.0;
  std::string normal_form_size;
  bool verified = false;
};

// Solves per_size random instances with n = m = size for every size in
// [lo, hi]. Records come back ordered by (n, seed).
std::vector<BenchRecord> run_bench(std::size_t lo, std::size_t hi, std::size_t per_size,
                                   std::uint64_t base_seed, std::size_t jobs);

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records);

}  // namespace cegame
