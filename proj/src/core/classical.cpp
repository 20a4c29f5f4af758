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

#include "core/classical.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "core/contract.hpp"
#include "core/errors.hpp"

namespace netrigid {

void validate_classical(const Network &net, const ClassicalStrategy &strat) {
    if (strat.sources.size() != net.num_sources() || strat.parties.size() != net.num_parties()) {
        fail_input("classical strategy does not align with the network");
    }
    for (size_t i = 0; i < net.num_sources(); i++) {
        const auto &s = strat.sources[i];
        if (s.source != net.source_id(i)) {
            fail_input("classical source at position " + std::to_string(i) + " is '" + s.source + "', expected '" +
                       net.source_id(i) + "'");
        }
        if (s.values.size() != s.probs.size() || s.values.empty()) {
            fail_input("source '" + s.source + "' needs one probability per value");
        }
        double sum = 0;
        for (size_t k = 0; k < s.values.size(); k++) {
            if (s.values[k].size() != net.source_parties(i).size()) {
                fail_input("source '" + s.source + "' value " + tuple_string(s.values[k]) + " has wrong length");
            }
            if (!(s.probs[k] >= 0) || !std::isfinite(s.probs[k])) {
                fail_input("source '" + s.source + "' has a negative or non-finite probability");
            }
            sum += s.probs[k];
        }
        if (std::abs(sum - 1) > kPmfTolerance) {
            fail_input("source '" + s.source + "' pmf does not sum to 1");
        }
    }
    for (size_t j = 0; j < net.num_parties(); j++) {
        const auto &p = strat.parties[j];
        if (p.party != net.party_id(j)) {
            fail_input("classical party at position " + std::to_string(j) + " is '" + p.party + "', expected '" +
                       net.party_id(j) + "'");
        }
        for (const auto &[t, pmf] : p.response) {
            if (t.size() != net.party_sources(j).size()) {
                fail_input("party '" + p.party + "' response tuple " + tuple_string(t) + " has wrong length");
            }
            double sum = 0;
            for (const auto &[a, q] : pmf) {
                if (a < 0 || static_cast<size_t>(a) >= p.outcomes.size()) {
                    fail_input("party '" + p.party + "' response names an unknown outcome");
                }
                if (!(q >= 0) || !std::isfinite(q)) {
                    fail_input("party '" + p.party + "' response has a negative or non-finite probability");
                }
                sum += q;
            }
            if (std::abs(sum - 1) > kPmfTolerance) {
                fail_input("party '" + p.party + "' response to " + tuple_string(t) + " does not sum to 1");
            }
        }
    }
}

JointDistribution classical_joint(const Network &net, const ClassicalStrategy &strat, uint64_t config_cap) {
    validate_classical(net, strat);
    std::vector<std::vector<std::pair<SymbolTuple, double>>> supports;
    for (const auto &s : strat.sources) {
        std::vector<std::pair<SymbolTuple, double>> sup;
        for (size_t k = 0; k < s.values.size(); k++) {
            if (s.probs[k] > 0) {
                sup.emplace_back(s.values[k], s.probs[k]);
            }
        }
        supports.push_back(std::move(sup));
    }
    JointDistribution dist;
    std::vector<std::map<SymbolTuple, std::vector<std::pair<int, double>>>> responses;
    std::vector<size_t> sizes;
    for (const auto &p : strat.parties) {
        dist.alphabets.push_back(p.outcomes);
        sizes.push_back(p.outcomes.size());
        responses.push_back(p.response);
    }
    auto radix = detail_sim::radix_for(sizes);
    std::unordered_map<uint64_t, double> acc;
    detail_sim::contract<double, double>(net, supports, responses, radix, config_cap, true,
                                         [&](uint64_t key, double v) { acc[key] += v; });
    std::vector<std::pair<uint64_t, double>> sorted(acc.begin(), acc.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    for (const auto &[key, p] : sorted) {
        if (p >= kAtomCutoff) {
            dist.atoms.emplace(detail_sim::decode(key, radix), p);
        }
    }
    return dist;
}

SymbolTuple HiddenPattern::delivered(const Network &net, size_t j) const {
    SymbolTuple out;
    for (size_t i : net.party_sources(j)) {
        out.push_back(source_symbols[i][net.slot_in_source(i, j)]);
    }
    return out;
}

namespace {

void token_search(const Network &net, const std::vector<int> &eta, const std::vector<int> &target, size_t i,
                  std::vector<int> &load, std::vector<SymbolTuple> &routing, std::vector<HiddenPattern> &out) {
    if (i == net.num_sources()) {
        if (load == target) {
            HiddenPattern p;
            p.kind = PatternKind::token_routing;
            p.index = static_cast<int>(out.size()) + 1;
            p.source_symbols = routing;
            out.push_back(std::move(p));
        }
        return;
    }
    auto parties = net.source_parties(i);
    SymbolTuple &comp = routing[i];
    comp.assign(parties.size(), 0);
    // Compositions of eta_i in lexicographic order, filled slot by slot.
    auto fill = [&](auto &&self, size_t slot, int left) -> void {
        if (slot + 1 == parties.size()) {
            size_t j = parties[slot];
            if (load[j] + left > target[j]) {
                return;
            }
            comp[slot] = left;
            load[j] += left;
            token_search(net, eta, target, i + 1, load, routing, out);
            load[j] -= left;
            return;
        }
        size_t j = parties[slot];
        for (int v = 0; v <= left; v++) {
            if (load[j] + v > target[j]) {
                break;
            }
            comp[slot] = v;
            load[j] += v;
            self(self, slot + 1, left - v);
            load[j] -= v;
        }
    };
    fill(fill, 0, eta[i]);
}

bool party_accepts(const ColorConstraint &c, const SymbolTuple &d) {
    if (const auto *m = std::get_if<ColorMatch>(&c.observed)) {
        return std::all_of(d.begin(), d.end(), [&](int s) { return s == m->color; });
    }
    if (const auto *r = std::get_if<RevealedTuple>(&c.observed)) {
        return d == r->symbols;
    }
    bool uniform = std::all_of(d.begin(), d.end(), [&](int s) { return s == d[0]; });
    return !uniform && !c.revealed.count(d);
}

}  // namespace

std::vector<HiddenPattern> enumerate_token_patterns(const Network &net, const std::vector<int> &eta,
                                                    const std::vector<int> &target) {
    if (eta.size() != net.num_sources() || target.size() != net.num_parties()) {
        fail_input("token pattern enumeration: eta needs one entry per source and target one per party");
    }
    long total_eta = 0, total_target = 0;
    for (int e : eta) {
        if (e < 0) {
            fail_input("negative token count");
        }
        total_eta += e;
    }
    for (int t : target) {
        total_target += t;
    }
    std::vector<HiddenPattern> out;
    if (total_eta != total_target) {
        return out;
    }
    std::vector<int> load(net.num_parties(), 0);
    std::vector<SymbolTuple> routing(net.num_sources());
    token_search(net, eta, target, 0, load, routing, out);
    return out;
}

std::vector<HiddenPattern> enumerate_color_patterns(const Network &net, int num_colors,
                                                    const std::vector<std::optional<ColorConstraint>> &constraints) {
    if (num_colors < 1) {
        fail_input("color count must be positive");
    }
    if (constraints.size() != net.num_parties()) {
        fail_input("color pattern enumeration needs one (possibly empty) constraint per party");
    }
    for (const auto &c : constraints) {
        if (c && std::holds_alternative<TokenCount>(c->observed)) {
            fail_input("token-count labels cannot constrain a coloring");
        }
    }
    // Parties are checked as soon as their last source is colored.
    std::vector<std::vector<size_t>> check_at(net.num_sources());
    for (size_t j = 0; j < net.num_parties(); j++) {
        if (constraints[j]) {
            auto src = net.party_sources(j);
            check_at[*std::max_element(src.begin(), src.end())].push_back(j);
        }
    }
    std::vector<HiddenPattern> out;
    std::vector<int> colors(net.num_sources(), 0);
    auto deliver = [&](size_t j) {
        SymbolTuple d;
        for (size_t i : net.party_sources(j)) {
            d.push_back(colors[i]);
        }
        return d;
    };
    auto search = [&](auto &&self, size_t i) -> void {
        if (i == net.num_sources()) {
            HiddenPattern p;
            p.kind = PatternKind::coloring;
            p.index = static_cast<int>(out.size()) + 1;
            p.colors = colors;
            for (size_t k = 0; k < net.num_sources(); k++) {
                p.source_symbols.emplace_back(net.source_parties(k).size(), colors[k]);
            }
            out.push_back(std::move(p));
            return;
        }
        for (int c = 0; c < num_colors; c++) {
            colors[i] = c;
            bool ok = true;
            for (size_t j : check_at[i]) {
                if (!party_accepts(*constraints[j], deliver(j))) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                self(self, i + 1);
            }
        }
    };
    search(search, 0);
    return out;
}

std::set<SymbolTuple> revealed_tuples(const MeasurementBasis &basis) {
    std::set<SymbolTuple> out;
    for (const auto &v : basis.vectors) {
        if (const auto *r = std::get_if<RevealedTuple>(&v.label)) {
            out.insert(r->symbols);
        }
    }
    return out;
}

}  // namespace netrigid
