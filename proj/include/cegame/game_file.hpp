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

#include <string>
#include <string_view>

#include <json.hpp>

#include "cegame/core.hpp"
#include "cegame/nash.hpp"
#include "cegame/reductions.hpp"
#include "cegame/stackelberg.hpp"

namespace cegame::io {

using Json = nlohmann::ordered_json;

// Game document:
//   {
//     "sites": ["A", "B"],
//     "catcher": {"resource": 1, "limits": 1, "a": 0, "b": 0, "c": 0, "d": {"A": 1, "B": 2}},
//     "evaders": [{"id": "e1", "resource": 1, "limits": 1, "b": ..., "d": ...}],
//     "annotations": {"edge_costs": [{"A": 0.5, "B": 1}]}
//   }
// Every coefficient is either a number broadcast to all sites or an object
// keyed by site name. "a" and "c" default to 0; "id" and "annotations" are
// optional. Unknown keys are rejected.
enum class Check { kSchemaOnly, kValidate };

CEGame game_from_json(const Json& doc, Check check = Check::kValidate);
CEGame parse_game(std::string_view text, Check check = Check::kValidate);
Json game_to_json(const CEGame& game);
std::string serialize_game(const CEGame& game);

// Profile document: {"catcher": {site: x, ...}, "evaders": [{site: x, ...}, ...]}.
// A solve-nash result (with a top-level "profile") is accepted as well.
Json profile_to_json(const CEGame& game, const StrategyProfile& profile);
StrategyProfile profile_from_json(const CEGame& game, const Json& doc);

Json report_to_json(const EquilibriumReport& report);
Json trace_to_json(const CEGame& game, const nash::IterationTrace& step);
Json nash_to_json(const CEGame& game, const nash::NashSolution& solution);
Json stackelberg_to_json(const CEGame& game, const StackelbergSolution& solution);
Json mixed_to_json(const CEGame& game, const MixedStrategy& mixed);

// Reduction inputs share one parser; "kind" selects the schema.
Json parse_json(std::string_view text);
std::string spec_kind(const Json& doc);
SecurityGameSpec security_spec_from_json(const Json& doc);
TestGameSpec test_spec_from_json(const Json& doc);
MatchingSpec matching_spec_from_json(const Json& doc);

}  // namespace cegame::io
