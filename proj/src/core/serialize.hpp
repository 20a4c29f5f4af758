// Copyright 2026 The netrigid Authors
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

#pragma once

#include <string>

#include "json.hpp"

#include "core/classical.hpp"
#include "core/lpcore.hpp"
#include "core/netgraph.hpp"
#include "core/quantum.hpp"
#include "core/rigidity.hpp"

namespace netrigid {

using Json = nlohmann::json;

// Every reader throws Error(invalid_input) with a path-like hint on malformed documents.
// Writers rely on nlohmann's sorted object keys, so equal values dump to equal bytes.

Json to_json(const OutcomeLabel &label);
OutcomeLabel label_from_json(const Json &j);

Json to_json(const Network &net);
Network network_from_json(const Json &j);

Json to_json(const QuantumStrategy &strat);
/// Sources and parties are matched to the network by id. Missing "dims" are inferred from
/// the largest symbol seen on each wire; missing "tokens" from the first support tuple.
QuantumStrategy strategy_from_json(const Network &net, const Json &j);

Json to_json(const ClassicalStrategy &strat);
ClassicalStrategy classical_from_json(const Network &net, const Json &j);

/// {"parties":[...], "alphabets":[[label...]...], "atoms":[{"outputs":[...], "p":...}]}
/// with outputs written as label strings and atoms in key order.
Json to_json(const Network &net, const JointDistribution &dist);
JointDistribution distribution_from_json(const Network &net, const Json &j);

Json to_json(const FeasibilityProblem &p);
FeasibilityProblem problem_from_json(const Json &j);

/// Nonzero witness entries and certificate multipliers are listed with their variable
/// names and row tags.
Json to_json(const FeasibilityProblem &p, const FeasibilityResult &r);
FeasibilityResult result_from_json(const FeasibilityProblem &p, const Json &j);

Json to_json(const Network &net, const HiddenPattern &pattern);

Json to_json(const Network &net, const CertificationReport &rep);

/// Parses text, mapping parse errors to Error(invalid_input).
Json parse_json(const std::string &text);

}  // namespace netrigid
