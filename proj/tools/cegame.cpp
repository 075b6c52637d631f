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

// Command-line front end. Every command writes JSON to stdout; failures print
// {"error": {...}} and exit with 2 (invalid input), 3 (unsupported instance),
// 4 (numeric trouble) or 1 (anything else).

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cegame/bench.hpp"
#include "cegame/core.hpp"
#include "cegame/errors.hpp"
#include "cegame/game_file.hpp"
#include "cegame/nash.hpp"
#include "cegame/random.hpp"
#include "cegame/reductions.hpp"
#include "cegame/stackelberg.hpp"

namespace {

using cegame::io::Json;

enum Exit { kOk = 0, kOther = 1, kInvalid = 2, kUnsupported = 3, kNumeric = 4 };

std::string read_file(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cegame::ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const Json& doc) { std::cout << doc.dump(2) << '\n'; }

int fail(Exit code, const std::string& kind, const std::string& message, Json extra = {}) {
  Json err = {{"kind", kind}, {"message", message}};
  if (!extra.is_null()) err["details"] = std::move(extra);
  std::cout << Json{{"error", err}}.dump(2) << '\n';
  return code;
}

cegame::CEGame load_game(const std::string& path) {
  return cegame::io::parse_game(read_file(path));
}

struct Args {
  std::string game;
  std::string profile;
  std::string spec;
  double eps = 1e-9;
  double verify_eps = 1e-6;
  std::size_t max_iterations = 1'000'000;
  bool trace = false;
  bool pre_swap = false;
  std::size_t player = 0;
  std::size_t n = 1;
  std::size_t m = 1;
  std::uint64_t seed = 0;
  std::string sizes = "2..10";
  std::size_t per_size = 20;
  std::string out;
  std::size_t jobs = 1;
};

int cmd_validate(const Args& args) {
  const auto game = cegame::io::parse_game(read_file(args.game), cegame::io::Check::kSchemaOnly);
  const auto violations = cegame::validate_game(game);
  if (violations.empty()) {
    emit({{"valid", true},
          {"evaders", game.num_evaders()},
          {"sites", game.num_sites()}});
    return kOk;
  }
  Json list = Json::array();
  for (const auto& v : violations) {
    Json item = {{"message", v.message}};
    if (v.player) item["player"] = *v.player;
    if (v.site) item["site"] = game.sites[*v.site];
    list.push_back(std::move(item));
  }
  return fail(kInvalid, "validation", violations.front().message, list);
}

int cmd_solve_nash(const Args& args) {
  const auto game = load_game(args.game);
  cegame::nash::SolveOptions options;
  options.eps = args.eps;
  options.verify_eps = args.verify_eps;
  options.max_iterations = args.max_iterations;
  options.trace = args.trace;
  try {
    const auto solution = cegame::nash::solve_nash(game, options);
    if (args.trace) {
      for (const auto& step : solution.trace) {
        std::cout << cegame::io::trace_to_json(game, step).dump() << '\n';
      }
      Json result = cegame::io::nash_to_json(game, solution);
      result["type"] = "result";
      std::cout << result.dump() << '\n';
    } else {
      emit(cegame::io::nash_to_json(game, solution));
    }
    return solution.verified.is_equilibrium ? kOk : kNumeric;
  } catch (const cegame::nash::IterationLimitExceeded& e) {
    if (args.trace) {
      for (const auto& step : e.trace()) {
        std::cout << cegame::io::trace_to_json(game, step).dump() << '\n';
      }
    }
    return fail(kNumeric, "iteration_limit", e.what());
  }
}

int cmd_solve_stackelberg(const Args& args) {
  const auto game = load_game(args.game);
  emit(cegame::io::stackelberg_to_json(game, cegame::solve_stackelberg(game)));
  return kOk;
}

int cmd_reduce(const std::string& kind, const Args& args) {
  const Json doc = cegame::io::parse_json(read_file(args.spec));
  const std::string declared = cegame::io::spec_kind(doc);
  if (declared != kind) {
    throw cegame::ParseError("spec kind is \"" + declared + "\", expected \"" + kind + "\"");
  }
  cegame::CEGame game;
  if (kind == "security") {
    game = cegame::security_to_ce(cegame::io::security_spec_from_json(doc));
  } else if (kind == "test") {
    const auto spec = cegame::io::test_spec_from_json(doc);
    game = args.pre_swap ? cegame::test_to_ce_unswapped(spec) : cegame::test_to_ce(spec);
  } else {
    game = cegame::matching_to_ce(cegame::io::matching_spec_from_json(doc));
  }
  emit(cegame::io::game_to_json(game));
  return kOk;
}

int cmd_swap(const Args& args) {
  const auto game =
      cegame::io::parse_game(read_file(args.game), cegame::io::Check::kSchemaOnly);
  emit(cegame::io::game_to_json(cegame::swap_roles(game)));
  return kOk;
}

int cmd_verify(const Args& args) {
  const auto game = load_game(args.game);
  const auto profile =
      cegame::io::profile_from_json(game, cegame::io::parse_json(read_file(args.profile)));
  const auto report = cegame::verify_equilibrium(game, profile, args.verify_eps);
  emit(cegame::io::report_to_json(report));
  return kOk;
}

int cmd_decompose(const Args& args) {
  const auto game = load_game(args.game);
  const auto profile =
      cegame::io::profile_from_json(game, cegame::io::parse_json(read_file(args.profile)));
  if (args.player >= game.num_players()) throw cegame::ValidationError("player out of range");
  const double r = game.resource[args.player];
  if (r != std::floor(r)) {
    throw cegame::UnsupportedInstance("decompose needs an integral resource");
  }
  for (double l : game.limit.row(args.player)) {
    if (l != 1.0) throw cegame::UnsupportedInstance("decompose needs unit limits");
  }
  const auto mixed =
      cegame::bvn_decompose(profile.x.row(args.player), static_cast<int>(r));
  emit({{"player", args.player}, {"atoms", cegame::io::mixed_to_json(game, mixed)}});
  return kOk;
}

int cmd_gen(const Args& args) {
  if (args.n < 1 || args.m < 1) throw cegame::ValidationError("--n and --m must be at least 1");
  std::cout << cegame::io::serialize_game(cegame::gen_random(args.n, args.m, args.seed));
  return kOk;
}

int cmd_bench(const Args& args) {
  const auto dots = args.sizes.find("..");
  std::size_t lo = 0;
  std::size_t hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoul(args.sizes);
    } else {
      lo = std::stoul(args.sizes.substr(0, dots));
      hi = std::stoul(args.sizes.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw cegame::ValidationError("--sizes must look like LO..HI");
  }
  const auto records = cegame::run_bench(lo, hi, args.per_size, args.seed, args.jobs);
  if (args.out.empty() || args.out == "-") {
    cegame::write_bench_csv(std::cout, records);
  } else {
    std::ofstream file(args.out);
    if (!file) throw cegame::Error("cannot write " + args.out);
    cegame::write_bench_csv(file, records);
    emit({{"rows", records.size()}, {"out", args.out}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Catcher-evader game solver"};
  app.require_subcommand(1);
  Args args;

  auto* validate = app.add_subcommand("validate", "Check a game file");
  validate->add_option("game", args.game)->required();

  auto* nash = app.add_subcommand("solve-nash", "Compute a Nash equilibrium");
  nash->add_option("game", args.game)->required();
  nash->add_option("--eps", args.eps, "Structural tolerance");
  nash->add_option("--verify-eps", args.verify_eps, "Verification tolerance");
  nash->add_option("--max-iterations", args.max_iterations);
  nash->add_flag("--trace", args.trace, "Emit one JSON line per phase");

  auto* stack = app.add_subcommand("solve-stackelberg", "Optimal catcher commitment (one evader)");
  stack->add_option("game", args.game)->required();

  auto* reduce = app.add_subcommand("reduce", "Convert a spec file into a game");
  reduce->require_subcommand(1);
  std::string reduce_kind;
  for (const char* kind : {"security", "test", "matching"}) {
    auto* sub = reduce->add_subcommand(kind);
    sub->add_option("spec", args.spec)->required();
    if (std::string(kind) == "test") {
      sub->add_flag("--pre-swap", args.pre_swap, "Keep the tester as player 0 before swapping");
    }
    sub->callback([&reduce_kind, kind] { reduce_kind = kind; });
  }

  auto* swap = app.add_subcommand("swap", "Swap catcher and evader roles");
  swap->add_option("game", args.game)->required();

  auto* verify = app.add_subcommand("verify", "Check a profile against best responses");
  verify->add_option("game", args.game)->required();
  verify->add_option("profile", args.profile)->required();
  verify->add_option("--eps", args.verify_eps);

  auto* decompose = app.add_subcommand("decompose", "Split marginals into pure assignments");
  decompose->add_option("game", args.game)->required();
  decompose->add_option("profile", args.profile)->required();
  decompose->add_option("--player", args.player);

  auto* gen = app.add_subcommand("gen", "Generate a random game");
  gen->add_option("--n", args.n)->required();
  gen->add_option("--m", args.m)->required();
  gen->add_option("--seed", args.seed);

  auto* bench = app.add_subcommand("bench", "Run the scaling benchmark");
  bench->add_option("--sizes", args.sizes, "LO..HI");
  bench->add_option("--per-size", args.per_size);
  bench->add_option("--out", args.out);
  bench->add_option("--seed", args.seed);
  bench->add_option("--jobs", args.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kInvalid, "usage", e.what());
  }

  try {
    if (*validate) return cmd_validate(args);
    if (*nash) return cmd_solve_nash(args);
    if (*stack) return cmd_solve_stackelberg(args);
    if (*reduce) return cmd_reduce(reduce_kind, args);
    if (*swap) return cmd_swap(args);
    if (*verify) return cmd_verify(args);
    if (*decompose) return cmd_decompose(args);
    if (*gen) return cmd_gen(args);
    if (*bench) return cmd_bench(args);
  } catch (const cegame::ParseError& e) {
    return fail(kInvalid, "parse", e.what());
  } catch (const cegame::ValidationError& e) {
    return fail(kInvalid, "validation", e.what());
  } catch (const cegame::UnsupportedInstance& e) {
    return fail(kUnsupported, "unsupported", e.what());
  } catch (const cegame::NumericDegeneracy& e) {
    return fail(kNumeric, "numeric", e.what());
  } catch (const std::exception& e) {
    return fail(kOther, "internal", e.what());
  }
  return kOther;
}
