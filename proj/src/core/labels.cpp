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

#include "core/labels.hpp"

#include <sstream>

namespace netrigid {

namespace {
template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

bool is_ambiguous(const OutcomeLabel &label) {
    return std::visit(
        overloaded{
            [](const TokenCount &t) { return t.alpha.has_value(); },
            [](const Ambiguous &) { return true; },
            [](const auto &) { return false; },
        },
        label);
}

OutcomeLabel coarse_label(const OutcomeLabel &label) {
    return std::visit(
        overloaded{
            [](const TokenCount &t) -> OutcomeLabel { return TokenCount{t.n, std::nullopt}; },
            [](const Ambiguous &) -> OutcomeLabel { return Ambiguous{std::nullopt}; },
            [](const auto &other) -> OutcomeLabel { return other; },
        },
        label);
}

std::string to_string(const OutcomeLabel &label) {
    std::ostringstream out;
    std::visit(
        overloaded{
            [&](const TokenCount &t) {
                out << "n=" << t.n;
                if (t.alpha) {
                    out << "/" << *t.alpha;
                }
            },
            [&](const ColorMatch &c) { out << "match=" << c.color; },
            [&](const RevealedTuple &r) {
                out << "|";
                for (int s : r.symbols) {
                    out << s;
                }
                out << ">";
            },
            [&](const Ambiguous &a) {
                out << "chi";
                if (a.index) {
                    out << *a.index;
                }
            },
        },
        label);
    return out.str();
}

std::string tuple_string(const SymbolTuple &t) {
    std::string s = "(";
    for (size_t k = 0; k < t.size(); k++) {
        if (k) {
            s += ",";
        }
        s += std::to_string(t[k]);
    }
    return s + ")";
}

}  // namespace netrigid
