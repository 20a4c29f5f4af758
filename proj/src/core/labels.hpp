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

#include <compare>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace netrigid {

/// Per-wire symbols received by a party (token counts or color indices), in the
/// party's subsystem order, or emitted by a source in the source's party order.
using SymbolTuple = std::vector<int>;

/// Number of tokens received, optionally refined by a superposed provenance index.
struct TokenCount {
    int n = 0;
    std::optional<int> alpha;
    auto operator<=>(const TokenCount &) const = default;
};

/// All incident sources carried color `color`.
struct ColorMatch {
    int color = 0;
    auto operator<=>(const ColorMatch &) const = default;
};

/// A computational-basis outcome naming the symbol received from every incident source.
struct RevealedTuple {
    SymbolTuple symbols;
    auto operator<=>(const RevealedTuple &) const = default;
};

/// A coherent outcome that does not reveal provenance. An empty index is the
/// coarse-grained ambiguous output.
struct Ambiguous {
    std::optional<int> index;
    auto operator<=>(const Ambiguous &) const = default;
};

using OutcomeLabel = std::variant<TokenCount, ColorMatch, RevealedTuple, Ambiguous>;

/// True for outputs whose provenance stays superposed: refined token counts and
/// ambiguous color outputs (coarse or refined).
bool is_ambiguous(const OutcomeLabel &label);

/// Drops the refinement indices (alpha, ambiguous index) and keeps everything that is
/// diagonal in the computational basis. This is the token/color coarse-graining.
OutcomeLabel coarse_label(const OutcomeLabel &label);

std::string to_string(const OutcomeLabel &label);

/// "(0,1,2)"
std::string tuple_string(const SymbolTuple &t);

}  // namespace netrigid
