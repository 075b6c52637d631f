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

#include "cegame/game_file.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cegame/errors.hpp"
#include "cegame/random.hpp"

namespace cegame::io {
namespace {

constexpr const char* kG1 = R"({
  "sites": ["A", "B"],
  "catcher": {"resource": 1, "limits": 1, "b": 0, "d": 1},
  "evaders": [{"id": "e1", "resource": 1, "limits": 1, "b": {"A": 6, "B": 4}, "d": -10}]
})";

std::string error_of(std::string_view text) {
  try {
    parse_game(text);
  } catch (const ValidationError& e) {
    return e.what();
  }
  return "";
}

TEST(ParseGame, BroadcastAndMaps) {
  const CEGame g = parse_game(kG1);
  EXPECT_EQ(g.sites, (std::vector<std::string>{"A", "B"}));
  EXPECT_EQ(g.d(0, 0), 1.0);
  EXPECT_EQ(g.d(0, 1), 1.0);
  EXPECT_EQ(g.b(1, 0), 6.0);
  EXPECT_EQ(g.b(1, 1), 4.0);
  EXPECT_EQ(g.a(1, 1), 0.0);
  EXPECT_EQ(g.evader_ids, (std::vector<std::string>{"e1"}));
}

TEST(ParseGame, MissingResourceNamesKey) {
  const std::string text = R"({"sites": ["A"], "catcher": {"limits": 1, "b": 0, "d": 1}, "evaders": []})";
  const auto message = error_of(text);
  EXPECT_NE(message.find("catcher"), std::string::npos);
  EXPECT_NE(message.find("\"resource\""), std::string::npos);
}

TEST(ParseGame, RejectsUnknownKeys) {
  const std::string text =
      R"({"sites": ["A"], "catcher": {"resource": 0, "limits": 1, "b": 0, "d": 1, "e": 2}, "evaders": []})";
  EXPECT_NE(error_of(text).find("unknown key \"e\""), std::string::npos);
  EXPECT_NE(error_of(R"({"sites": [], "bogus": 1})").find("bogus"), std::string::npos);
}

TEST(ParseGame, RejectsUnknownSiteAndMissingSite) {
  const std::string unknown =
      R"({"sites": ["A"], "catcher": {"resource": 0, "limits": 1, "b": {"Z": 1}, "d": 1}, "evaders": []})";
  EXPECT_NE(error_of(unknown).find("unknown name \"Z\""), std::string::npos);
  const std::string missing =
      R"({"sites": ["A", "B"], "catcher": {"resource": 0, "limits": 1, "b": {"A": 1}, "d": 1}, "evaders": []})";
  EXPECT_NE(error_of(missing).find("missing site \"B\""), std::string::npos);
}

TEST(ParseGame, MalformedJson) { EXPECT_THROW(parse_game("{\"sites\": ["), ParseError); }

TEST(ParseGame, RunsValidation) {
  const std::string text =
      R"({"sites": ["A"], "catcher": {"resource": 0, "limits": 1, "b": 0, "d": -1}, "evaders": []})";
  EXPECT_THROW(parse_game(text), ValidationError);
  EXPECT_NO_THROW(parse_game(text, Check::kSchemaOnly));
}

TEST(SerializeGame, RoundTripIsExact) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> unit(-1e3, 1e3);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    CEGame g = gen_random(1 + seed % 4, 1 + seed % 6, seed);
    for (std::size_t i = 0; i < g.num_players(); ++i) {
      for (std::size_t s = 0; s < g.num_sites(); ++s) {
        g.a(i, s) = unit(rng);
        g.c(i, s) = unit(rng) * 1e-7;
        g.b(i, s) += 1.0 / 3.0;
        g.limit(i, s) = 1.0 + 0.1 * static_cast<double>(s);
      }
    }
    if (seed % 3 == 0) {
      Matrix costs(g.num_evaders(), g.num_sites());
      for (std::size_t k = 0; k < g.num_evaders(); ++k) {
        for (std::size_t s = 0; s < g.num_sites(); ++s) costs(k, s) = unit(rng);
      }
      g.edge_costs = costs;
    }
    EXPECT_EQ(parse_game(serialize_game(g)), g) << seed;
  }
}

TEST(SerializeGame, UsesScalarForUniformRows) {
  const CEGame g = parse_game(kG1);
  const Json doc = game_to_json(g);
  EXPECT_TRUE(doc["catcher"]["d"].is_number());
  EXPECT_TRUE(doc["evaders"][0]["b"].is_object());
}

TEST(Profile, RoundTrip) {
  const CEGame g = parse_game(kG1);
  StrategyProfile p{Matrix(2, 2)};
  p.x(0, 0) = 0.6;
  p.x(0, 1) = 0.4;
  p.x(1, 0) = 0.5;
  p.x(1, 1) = 0.5;
  EXPECT_EQ(profile_from_json(g, profile_to_json(g, p)), p);
  const Json wrapped = {{"profile", profile_to_json(g, p)}};
  EXPECT_EQ(profile_from_json(g, wrapped), p);
}

TEST(Specs, SecurityRoundTrip) {
  const Json doc = parse_json(R"({
    "kind": "security", "targets": ["t"],
    "defender": {"resources": 1, "covered": 1, "uncovered": -10},
    "attackers": [
      {"id": "a1", "probability": 0.5, "resources": 1, "covered": -5, "uncovered": 5},
      {"id": "a2", "probability": 0.5, "resources": 1, "covered": -9, "uncovered": 10}]})");
  EXPECT_EQ(spec_kind(doc), "security");
  const auto spec = security_spec_from_json(doc);
  ASSERT_EQ(spec.attackers.size(), 2u);
  EXPECT_EQ(spec.attackers[1].uncovered, std::vector<double>{10.0});
}

TEST(Specs, TestHardSetsByName) {
  const auto spec = test_spec_from_json(parse_json(R"({
    "kind": "test", "questions": ["q1", "q2"], "scores": 5, "weights": {"q1": 4, "q2": 1},
    "test_length": 1,
    "takers": [{"id": "t", "probability": 1, "importance": 1, "hard": ["q2"], "memorize": 1}]})"));
  EXPECT_EQ(spec.takers[0].hard, std::vector<std::size_t>{1});
  EXPECT_EQ(spec.weights, (std::vector<double>{4.0, 1.0}));
}

TEST(Specs, MatchingEdgesByName) {
  const auto spec = matching_spec_from_json(parse_json(R"({
    "kind": "matching", "left": [{"id": "u", "capacity": 1}],
    "right": [{"id": "v1", "capacity": 0.5}, {"id": "v2", "capacity": 0.5}],
    "edges": [{"left": "u", "right": "v2", "capacity": 1, "cost": 0.3}]})"));
  ASSERT_EQ(spec.edges.size(), 1u);
  EXPECT_EQ(spec.edges[0].right, 1u);
  EXPECT_THROW(matching_spec_from_json(parse_json(R"({"kind": "matching", "left": [], "right": [],
    "edges": [{"left": "x", "right": "y", "capacity": 1, "cost": 0}]})")),
               ParseError);
}

}  // namespace
}  // namespace cegame::io
