// Copyright 2026 The nlgames Authors
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

// JSON file formats for games, boxes, states and strategies, plus report
// serialization. Parse failures throw FormatError; values that parse but
// violate a domain constraint throw ValidationError.

#ifndef NLGAMES_IO_HPP_
#define NLGAMES_IO_HPP_

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "nlgames/analysis.hpp"
#include "nlgames/box.hpp"
#include "nlgames/game.hpp"
#include "nlgames/quantum.hpp"

namespace nlgames::io {

using Json = nlohmann::json;

// Rounds to 9 significant digits; every float written by this module goes
// through it.
double Round9(double v);
std::string Format9(double v);

Json ReadJsonFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

// {"kappa": r, "tau": r} or {"uA": [16], "uB": [16], "prior": [4]}.
UtilityTable GameFromJson(const Json& j);
Json GameToJson(const UtilityTable& table);

// {"format": "full", "p": [16]} or
// {"format": "canonical", "m": [2], "n": [2], "c": [4]}.
Box BoxFromJson(const Json& j);
Json BoxToJson(const Box& box);
Json CanonicalToJson(const CanonicalBox& c);

// {"pure_a": r} | {"werner_p": r} | {"rho": [[re, im] x 16]}.
TwoQubitState StateFromJson(const Json& j);
// A state object plus "alice": [[theta, phi], [theta, phi]], "bob": [...],
// optional "povm": {"alpha": r, "mu": r}.
QuantumStrategy StrategyFromJson(const Json& j);
Json StrategyToJson(const QuantumStrategy& s);

Json PayoffsToJson(const PayoffPair& p);
Json ScanResultToJson(const ScanResult& r, std::size_t max_points);

// Header "a,F_A,F_B".
std::string CurveToCsv(const GisinCurve& curve);

}  // namespace nlgames::io

#endif  // NLGAMES_IO_HPP_
