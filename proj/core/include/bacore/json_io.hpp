// Copyright 2026 The bacore authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BACORE_JSON_IO_HPP
#define BACORE_JSON_IO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "bacore/core_solver.hpp"
#include "bacore/game_model.hpp"
#include "bacore/infinite_harness.hpp"
#include "bacore/witness_builder.hpp"

namespace bacore {

using Json = nlohmann::json;

// Rationals always serialize as strings ("p/q" or "p") so nothing is ever
// rounded. Coalitions serialize as sorted member arrays; cofinite ones as
// {"excluded": [...]}.
Json to_json(const Rational& q);
Json to_json(const Coalition& s);
Json to_json(const PayoffVector& a);
Json to_json(const BalancedCertificate& cert);
Json to_json(const CoreDecision& d);
Json to_json(const DiscreteMeasure& m);
Json to_json(const WitnessReport& rep);
Json to_json(const EpsilonReport& rep);
Json to_json(const LadderReport& rep);
Json to_json(const CenteredProbe& probe);
Json to_json(const FieldOfSets& field);

Coalition coalition_from_json(const PlayerUniverse& u, const Json& j);

using ParsedGame = std::variant<Game, RestrictedGame, GameRule>;

/// Parses a game file:
///   {"universe": {"finite": 3} | "naturals",
///    "rule": "example1" | "example2",            (rule games)
///    "values": [{"set": [...], "value": "p/q"}], (table games)
///    "grand": "p/q",
///    "lower_bound": "p/q",                       (optional)
///    "family": [coalition, ...]}                 (restricted games)
ParsedGame parse_game(const Json& j);
ParsedGame parse_game_file(const std::string& path);

/// Parses the `--family` flag syntax: semicolon-separated coalitions,
/// comma-separated members, "~" prefix for cofinite ("1,2;~3;").
SetFamily parse_family(const PlayerUniverse& u, const std::string& text);

}  // namespace bacore

#endif  // BACORE_JSON_IO_HPP
