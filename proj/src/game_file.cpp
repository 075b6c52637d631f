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

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <map>

#include "cegame/errors.hpp"

namespace cegame::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what);
}

void reject_unknown(const Json& obj, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(path, "unknown key \"" + key + "\"");
    }
  }
}

const Json& require(const Json& obj, const std::string& path, const std::string& key) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path, "missing required key \"" + key + "\"");
  return *it;
}

double number(const Json& v, const std::string& path) {
  if (!v.is_number()) fail(path, "expected a number");
  return v.get<double>();
}

std::string text(const Json& v, const std::string& path) {
  if (!v.is_string()) fail(path, "expected a string");
  return v.get<std::string>();
}

std::vector<std::string> names(const Json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of names");
  std::vector<std::string> out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    out.push_back(text(v[k], path + "[" + std::to_string(k) + "]"));
  }
  std::vector<std::string> sorted = out;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    fail(path, "duplicate name");
  }
  return out;
}

std::size_t index_of(const std::vector<std::string>& names, const std::string& name,
                     const std::string& path) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(path, "unknown name \"" + name + "\"");
  return static_cast<std::size_t>(it - names.begin());
}

// A number broadcast to every site, or an object keyed by site name.
std::vector<double> per_site(const Json& v, const std::vector<std::string>& sites,
                             const std::string& path) {
  if (v.is_number()) return std::vector<double>(sites.size(), v.get<double>());
  if (!v.is_object()) fail(path, "expected a number or an object keyed by site");
  std::vector<double> out(sites.size(), 0.0);
  std::vector<bool> seen(sites.size(), false);
  for (const auto& [key, value] : v.items()) {
    const std::size_t s = index_of(sites, key, path);
    out[s] = number(value, path + "." + key);
    seen[s] = true;
  }
  for (std::size_t s = 0; s < sites.size(); ++s) {
    if (!seen[s]) fail(path, "missing site \"" + sites[s] + "\"");
  }
  return out;
}

Json per_site_json(std::span<const double> values, const std::vector<std::string>& sites) {
  if (!values.empty() &&
      std::all_of(values.begin(), values.end(), [&](double v) { return v == values[0]; })) {
    return values[0];
  }
  Json out = Json::object();
  for (std::size_t s = 0; s < sites.size(); ++s) out[sites[s]] = values[s];
  return out;
}

Json per_site_always(std::span<const double> values, const std::vector<std::string>& sites) {
  Json out = Json::object();
  for (std::size_t s = 0; s < sites.size(); ++s) out[sites[s]] = values[s];
  return out;
}

void read_player(const Json& obj, const std::string& path, bool evader, std::size_t row,
                 CEGame& game) {
  if (evader) {
    reject_unknown(obj, path, {"id", "resource", "limits", "a", "b", "c", "d"});
  } else {
    reject_unknown(obj, path, {"resource", "limits", "a", "b", "c", "d"});
  }
  game.resource[row] = number(require(obj, path, "resource"), path + ".resource");
  const std::pair<const char*, Matrix*> fields[] = {
      {"limits", &game.limit}, {"a", &game.a}, {"b", &game.b}, {"c", &game.c}, {"d", &game.d}};
  for (const auto& [key, matrix] : fields) {
    const bool optional = std::string_view(key) == "a" || std::string_view(key) == "c";
    if (optional && !obj.contains(key)) continue;
    const auto values = per_site(require(obj, path, key), game.sites, path + "." + key);
    std::copy(values.begin(), values.end(), matrix->row(row).begin());
  }
}

Json write_player(const CEGame& game, std::size_t row) {
  Json out = Json::object();
  if (row != kCatcher) out["id"] = game.evader_ids[row - 1];
  out["resource"] = game.resource[row];
  out["limits"] = per_site_json(game.limit.row(row), game.sites);
  out["a"] = per_site_json(game.a.row(row), game.sites);
  out["b"] = per_site_json(game.b.row(row), game.sites);
  out["c"] = per_site_json(game.c.row(row), game.sites);
  out["d"] = per_site_json(game.d.row(row), game.sites);
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

CEGame game_from_json(const Json& doc, Check check) {
  reject_unknown(doc, "game", {"sites", "catcher", "evaders", "annotations"});
  CEGame game;
  game.sites = names(require(doc, "game", "sites"), "sites");
  const Json& evaders = require(doc, "game", "evaders");
  if (!evaders.is_array()) fail("evaders", "expected an array");

  const std::size_t n = evaders.size();
  const std::size_t m = game.sites.size();
  game.evader_ids.assign(n, "");
  game.resource.assign(n + 1, 0.0);
  game.limit = Matrix(n + 1, m);
  game.a = Matrix(n + 1, m);
  game.b = Matrix(n + 1, m);
  game.c = Matrix(n + 1, m);
  game.d = Matrix(n + 1, m);

  read_player(require(doc, "game", "catcher"), "catcher", false, kCatcher, game);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string path = "evaders[" + std::to_string(k) + "]";
    read_player(evaders[k], path, true, k + 1, game);
    if (evaders[k].contains("id")) game.evader_ids[k] = text(evaders[k]["id"], path + ".id");
  }

  if (doc.contains("annotations")) {
    const Json& notes = doc["annotations"];
    reject_unknown(notes, "annotations", {"edge_costs"});
    if (notes.contains("edge_costs")) {
      const Json& rows = notes["edge_costs"];
      if (!rows.is_array() || rows.size() != n) {
        fail("annotations.edge_costs", "expected one entry per evader");
      }
      Matrix costs(n, m);
      for (std::size_t k = 0; k < n; ++k) {
        const auto values =
            per_site(rows[k], game.sites, "annotations.edge_costs[" + std::to_string(k) + "]");
        std::copy(values.begin(), values.end(), costs.row(k).begin());
      }
      game.edge_costs = std::move(costs);
    }
  }
  if (check == Check::kValidate) require_valid(game);
  return game;
}

CEGame parse_game(std::string_view text, Check check) {
  return game_from_json(parse_json(text), check);
}

Json game_to_json(const CEGame& game) {
  Json doc = Json::object();
  doc["sites"] = game.sites;
  doc["catcher"] = write_player(game, kCatcher);
  Json evaders = Json::array();
  for (std::size_t i = 1; i < game.num_players(); ++i) evaders.push_back(write_player(game, i));
  doc["evaders"] = std::move(evaders);
  if (game.edge_costs) {
    Json rows = Json::array();
    for (std::size_t k = 0; k < game.num_evaders(); ++k) {
      rows.push_back(per_site_always(game.edge_costs->row(k), game.sites));
    }
    doc["annotations"] = Json{{"edge_costs", std::move(rows)}};
  }
  return doc;
}

std::string serialize_game(const CEGame& game) { return game_to_json(game).dump(2) + "\n"; }

Json profile_to_json(const CEGame& game, const StrategyProfile& profile) {
  Json doc = Json::object();
  doc["catcher"] = per_site_always(profile.x.row(kCatcher), game.sites);
  Json evaders = Json::array();
  for (std::size_t i = 1; i < game.num_players(); ++i) {
    evaders.push_back(per_site_always(profile.x.row(i), game.sites));
  }
  doc["evaders"] = std::move(evaders);
  return doc;
}

StrategyProfile profile_from_json(const CEGame& game, const Json& doc) {
  if (doc.is_object() && doc.contains("profile")) return profile_from_json(game, doc["profile"]);
  reject_unknown(doc, "profile", {"catcher", "evaders"});
  StrategyProfile profile = zero_profile(game);
  const auto catcher = per_site(require(doc, "profile", "catcher"), game.sites, "profile.catcher");
  std::copy(catcher.begin(), catcher.end(), profile.x.row(kCatcher).begin());
  const Json& evaders = require(doc, "profile", "evaders");
  if (!evaders.is_array() || evaders.size() != game.num_evaders()) {
    fail("profile.evaders", "expected one entry per evader");
  }
  for (std::size_t k = 0; k < evaders.size(); ++k) {
    const auto row =
        per_site(evaders[k], game.sites, "profile.evaders[" + std::to_string(k) + "]");
    std::copy(row.begin(), row.end(), profile.x.row(k + 1).begin());
  }
  return profile;
}

Json report_to_json(const EquilibriumReport& report) {
  Json players = Json::array();
  for (const auto& p : report.players) {
    players.push_back({{"utility_gap", p.utility_gap},
                       {"structure_violation", p.structure_violation}});
  }
  return {{"is_equilibrium", report.is_equilibrium},
          {"worst_violation", report.worst_violation},
          {"feasibility_violation", report.feasibility_violation},
          {"players", std::move(players)}};
}

Json trace_to_json(const CEGame& game, const nash::IterationTrace& step) {
  Json open = Json::array();
  for (std::size_t s = 0; s < step.boundary_open.size(); ++s) {
    if (step.boundary_open[s]) open.push_back(game.sites[s]);
  }
  Json entered = Json::array();
  for (std::size_t s : step.entered_boundary) entered.push_back(game.sites[s]);
  Json out = {{"type", "trace"},
              {"step", step.step},
              {"phase", std::string(nash::phase_name(step.phase))},
              {"delta", step.delta}};
  out["theta0"] = step.theta0 ? Json(*step.theta0) : Json(nullptr);
  out["catcher_allocated"] = step.catcher_allocated;
  out["boundary_open"] = std::move(open);
  out["entered_boundary"] = std::move(entered);
  return out;
}

Json nash_to_json(const CEGame& game, const nash::NashSolution& solution) {
  return {{"profile", profile_to_json(game, solution.profile)},
          {"iterations", solution.iterations},
          {"verified", report_to_json(solution.verified)}};
}

Json stackelberg_to_json(const CEGame& game, const StackelbergSolution& solution) {
  return {{"coverage", per_site_always(solution.coverage, game.sites)},
          {"attacked_site", game.sites[solution.attacked_site]},
          {"catcher_utility", solution.catcher_utility},
          {"evader_utility", solution.evader_utility}};
}

Json mixed_to_json(const CEGame& game, const MixedStrategy& mixed) {
  Json atoms = Json::array();
  for (const auto& atom : mixed.atoms) {
    Json sites = Json::array();
    for (std::size_t s : atom.sites) sites.push_back(game.sites[s]);
    atoms.push_back({{"sites", std::move(sites)}, {"probability", atom.probability}});
  }
  return atoms;
}

std::string spec_kind(const Json& doc) {
  if (!doc.is_object()) fail("spec", "expected an object");
  return text(require(doc, "spec", "kind"), "kind");
}

SecurityGameSpec security_spec_from_json(const Json& doc) {
  reject_unknown(doc, "spec", {"kind", "targets", "defender", "attackers"});
  SecurityGameSpec spec;
  spec.targets = names(require(doc, "spec", "targets"), "targets");
  const Json& def = require(doc, "spec", "defender");
  reject_unknown(def, "defender", {"resources", "covered", "uncovered"});
  spec.defender.resources = number(require(def, "defender", "resources"), "defender.resources");
  spec.defender.covered = per_site(require(def, "defender", "covered"), spec.targets, "defender.covered");
  spec.defender.uncovered =
      per_site(require(def, "defender", "uncovered"), spec.targets, "defender.uncovered");
  const Json& attackers = require(doc, "spec", "attackers");
  if (!attackers.is_array()) fail("attackers", "expected an array");
  for (std::size_t k = 0; k < attackers.size(); ++k) {
    const std::string path = "attackers[" + std::to_string(k) + "]";
    const Json& a = attackers[k];
    reject_unknown(a, path, {"id", "probability", "resources", "covered", "uncovered"});
    SecurityGameSpec::AttackerType type;
    if (a.contains("id")) type.id = text(a["id"], path + ".id");
    type.probability = number(require(a, path, "probability"), path + ".probability");
    type.resources = number(require(a, path, "resources"), path + ".resources");
    type.covered = per_site(require(a, path, "covered"), spec.targets, path + ".covered");
    type.uncovered = per_site(require(a, path, "uncovered"), spec.targets, path + ".uncovered");
    spec.attackers.push_back(std::move(type));
  }
  return spec;
}

TestGameSpec test_spec_from_json(const Json& doc) {
  reject_unknown(doc, "spec", {"kind", "questions", "scores", "weights", "test_length", "takers"});
  TestGameSpec spec;
  spec.questions = names(require(doc, "spec", "questions"), "questions");
  spec.scores = per_site(require(doc, "spec", "scores"), spec.questions, "scores");
  spec.weights = per_site(require(doc, "spec", "weights"), spec.questions, "weights");
  spec.test_length = number(require(doc, "spec", "test_length"), "test_length");
  const Json& takers = require(doc, "spec", "takers");
  if (!takers.is_array()) fail("takers", "expected an array");
  for (std::size_t k = 0; k < takers.size(); ++k) {
    const std::string path = "takers[" + std::to_string(k) + "]";
    const Json& t = takers[k];
    reject_unknown(t, path, {"id", "probability", "importance", "hard", "memorize"});
    TestGameSpec::Taker taker;
    if (t.contains("id")) taker.id = text(t["id"], path + ".id");
    taker.probability = number(require(t, path, "probability"), path + ".probability");
    taker.importance = number(require(t, path, "importance"), path + ".importance");
    taker.memorize = number(require(t, path, "memorize"), path + ".memorize");
    for (const auto& q : names(require(t, path, "hard"), path + ".hard")) {
      taker.hard.push_back(index_of(spec.questions, q, path + ".hard"));
    }
    spec.takers.push_back(std::move(taker));
  }
  return spec;
}

MatchingSpec matching_spec_from_json(const Json& doc) {
  reject_unknown(doc, "spec", {"kind", "left", "right", "edges"});
  MatchingSpec spec;
  auto vertices = [&](const char* key) {
    const Json& list = require(doc, "spec", key);
    if (!list.is_array()) fail(key, "expected an array");
    std::vector<MatchingSpec::Vertex> out;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string path = std::string(key) + "[" + std::to_string(k) + "]";
      reject_unknown(list[k], path, {"id", "capacity"});
      out.push_back({text(require(list[k], path, "id"), path + ".id"),
                     number(require(list[k], path, "capacity"), path + ".capacity")});
    }
    return out;
  };
  spec.left = vertices("left");
  spec.right = vertices("right");
  std::vector<std::string> left_ids;
  std::vector<std::string> right_ids;
  for (const auto& v : spec.left) left_ids.push_back(v.id);
  for (const auto& v : spec.right) right_ids.push_back(v.id);

  const Json& edges = require(doc, "spec", "edges");
  if (!edges.is_array()) fail("edges", "expected an array");
  for (std::size_t k = 0; k < edges.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "]";
    const Json& e = edges[k];
    reject_unknown(e, path, {"left", "right", "capacity", "cost"});
    spec.edges.push_back({index_of(left_ids, text(require(e, path, "left"), path + ".left"), path),
                          index_of(right_ids, text(require(e, path, "right"), path + ".right"), path),
                          number(require(e, path, "capacity"), path + ".capacity"),
                          number(require(e, path, "cost"), path + ".cost")});
  }
  return spec;
}

}  // namespace cegame::io
