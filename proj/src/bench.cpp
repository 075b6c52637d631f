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

#include "cegame/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "cegame/core.hpp"
#include "cegame/errors.hpp"
#include "cegame/nash.hpp"
#include "cegame/random.hpp"

namespace cegame {

namespace {

BenchRecord run_one(std::size_t size, std::uint64_t seed) {
  const CEGame game = gen_random(size, size, seed);
  const auto start = std::chrono::steady_clock::now();
  const nash::NashSolution solution = nash::solve_nash(game);
  const auto stop = std::chrono::steady_clock::now();

  BenchRecord record;
  record.n = size;
  record.m = size;
  record.seed = seed;
  record.iterations = solution.iterations;
  record.wall_time_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  record.normal_form_size = normal_form_size(game).str();
  record.verified = verify_equilibrium(game, solution.profile).is_equilibrium;
  if (!record.verified) {
    throw NumericDegeneracy("bench instance n=" + std::to_string(size) +
                            " seed=" + std::to_string(seed) + " failed verification");
  }
  return record;
}

}  // namespace

std::vector<BenchRecord> run_bench(std::size_t lo, std::size_t hi, std::size_t per_size,
                                   std::uint64_t base_seed, std::size_t jobs) {
  if (lo < 1 || hi < lo) throw ValidationError("bench sizes must satisfy 1 <= lo <= hi");
  std::vector<std::pair<std::size_t, std::uint64_t>> tasks;
  for (std::size_t size = lo; size <= hi; ++size) {
    for (std::size_t k = 0; k < per_size; ++k) tasks.emplace_back(size, base_seed + k);
  }
  std::vector<BenchRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      try {
        records[k] = run_one(tasks[k].first, tasks[k].second);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
        next = tasks.size();
      }
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(1, tasks.size()));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return records;
}

void write_bench_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "n,m,seed,iterations,wall_time_ms,normal_form_size,verified\n";
  for (const auto& r : records) {
    out << r.n << ',' << r.m << ',' << r.seed << ',' << r.iterations << ',' << r.wall_time_ms
        << ',' << r.normal_form_size << ',' << (r.verified ? "true" : "false") << '\n';
  }
}

}  // namespace cegame
