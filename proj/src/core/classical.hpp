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

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/labels.hpp"
#include "core/netgraph.hpp"
#include "core/quantum.hpp"

namespace netrigid {

struct ClassicalSource {
    std::string source;
    /// Each value is the tuple of symbols handed to the connected parties (source order).
    std::vector<SymbolTuple> values;
    std::vector<double> probs;
};

struct ClassicalParty {
    std::string party;
    std::vector<OutcomeLabel> outcomes;
    /// Received tuple (party's source order) -> pmf over outcome indices.
    std::map<SymbolTuple, std::vector<std::pair<int, double>>> response;
};

struct ClassicalStrategy {
    std::vector<ClassicalSource> sources;  // aligned with network source indices
    std::vector<ClassicalParty> parties;   // aligned with network party indices
};

inline constexpr double kPmfTolerance = 1e-12;

/// Throws Error(invalid_input) on misaligned ids, bad tuples, or pmfs off by more than 1e-12.
void validate_classical(const Network &net, const ClassicalStrategy &strat);

/// Exact sum over all source-value tuples of prod p(s_i) prod P(a_j | received).
JointDistribution classical_joint(const Network &net, const ClassicalStrategy &strat,
                                  uint64_t config_cap = kDefaultConfigCap);

enum class PatternKind {
    token_routing,
    coloring,
};

/// A global hidden assignment of source symbols. `source_symbols[i]` is the tuple source i
/// hands to its parties: token counts for routings, the repeated color for colorings.
struct HiddenPattern {
    PatternKind kind = PatternKind::token_routing;
    int index = 0;  // 1-based, lexicographic
    std::vector<SymbolTuple> source_symbols;
    std::vector<int> colors;  // colorings only

    /// Tuple received by party j in its source order.
    SymbolTuple delivered(const Network &net, size_t j) const;
};

/// All routings of eta_i tokens per source whose per-party totals equal `target`, in
/// lexicographic order of the flattened routing.
std::vector<HiddenPattern> enumerate_token_patterns(const Network &net, const std::vector<int> &eta,
                                                    const std::vector<int> &target);

struct ColorConstraint {
    OutcomeLabel observed;
    /// Revealed tuples present in the party's basis; an Ambiguous observation excludes them.
    std::set<SymbolTuple> revealed;
};

/// All colorings with colors 0..C-1 consistent with the per-party constraints (absent
/// entries are unconstrained), in lexicographic order of (c_1, ..., c_I).
std::vector<HiddenPattern> enumerate_color_patterns(const Network &net, int num_colors,
                                                    const std::vector<std::optional<ColorConstraint>> &constraints);

/// Revealed tuples of a party's basis (labels of kind RevealedTuple).
std::set<SymbolTuple> revealed_tuples(const MeasurementBasis &basis);

}  // namespace netrigid
