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

#include "core/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_map>

#include "core/classical.hpp"
#include "core/contract.hpp"
#include "core/errors.hpp"

namespace netrigid {

namespace {

/// Wire alphabet sizes seen by party j, in its source order.
std::vector<int> party_dims(const Network &net, const QuantumStrategy &strat, size_t j) {
    std::vector<int> dims;
    for (size_t i : net.party_sources(j)) {
        dims.push_back(strat.sources[i].dims[net.slot_in_source(i, j)]);
    }
    return dims;
}

bool check_tuples(const AmplitudeMap &amps, const std::vector<int> &dims, const std::string &where,
                  std::vector<Violation> &out) {
    bool ok = true;
    std::set<SymbolTuple> seen;
    for (const auto &[t, a] : amps) {
        if (t.size() != dims.size()) {
            out.push_back({"structure", where, "tuple " + tuple_string(t) + " has wrong length"});
            ok = false;
            continue;
        }
        for (size_t k = 0; k < t.size(); k++) {
            if (t[k] < 0 || t[k] >= dims[k]) {
                out.push_back({"structure", where, "tuple " + tuple_string(t) + " symbol out of range"});
                ok = false;
                break;
            }
        }
        if (!seen.insert(t).second) {
            out.push_back({"structure", where, "tuple " + tuple_string(t) + " listed twice"});
            ok = false;
        }
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            out.push_back({"structure", where, "non-finite amplitude at " + tuple_string(t)});
            ok = false;
        }
    }
    return ok;
}

Amplitude inner(const AmplitudeMap &u, const std::map<SymbolTuple, Amplitude> &v) {
    Amplitude s = 0;
    for (const auto &[t, a] : u) {
        auto it = v.find(t);
        if (it != v.end()) {
            s += std::conj(a) * it->second;
        }
    }
    return s;
}

void check_label(const BasisVector &v, StrategyKind kind, const std::string &where, std::vector<Violation> &out) {
    if (const auto *tc = std::get_if<TokenCount>(&v.label)) {
        if (kind == StrategyKind::color_matching) {
            out.push_back({"label", where, "token-count label in a color-matching strategy"});
        }
        for (const auto &[t, a] : v.amplitudes) {
            int sum = 0;
            for (int s : t) {
                sum += s;
            }
            if (std::abs(a) > 0 && sum != tc->n) {
                out.push_back({"label", where, "support tuple " + tuple_string(t) + " carries " + std::to_string(sum) +
                                                   " tokens, label says " + std::to_string(tc->n)});
            }
        }
    } else if (const auto *cm = std::get_if<ColorMatch>(&v.label)) {
        if (kind == StrategyKind::token_counting) {
            out.push_back({"label", where, "color-match label in a token-counting strategy"});
        }
        for (const auto &[t, a] : v.amplitudes) {
            bool uniform = std::all_of(t.begin(), t.end(), [&](int s) { return s == cm->color; });
            if (std::abs(a) > 0 && !uniform) {
                out.push_back({"label", where, "support tuple " + tuple_string(t) + " is not a match of the label color"});
            }
        }
    } else if (const auto *rv = std::get_if<RevealedTuple>(&v.label)) {
        for (const auto &[t, a] : v.amplitudes) {
            if (std::abs(a) > 0 && t != rv->symbols) {
                out.push_back({"label", where, "revealed label has support outside " + tuple_string(rv->symbols)});
            }
        }
    } else if (kind == StrategyKind::token_counting) {
        out.push_back({"label", where, "ambiguous label in a token-counting strategy"});
    }
}

template <class F>
void for_each_tuple(const std::vector<int> &dims, F &&f) {
    SymbolTuple t(dims.size(), 0);
    for (int d : dims) {
        if (d <= 0) {
            return;
        }
    }
    while (true) {
        f(t);
        size_t k = dims.size();
        while (k > 0) {
            k--;
            if (++t[k] < dims[k]) {
                break;
            }
            t[k] = 0;
            if (k == 0) {
                return;
            }
        }
        if (dims.empty()) {
            return;
        }
    }
}

}  // namespace

ValidationReport validate_strategy(const Network &net, const QuantumStrategy &strat) {
    ValidationReport rep;
    auto &out = rep.violations;
    if (strat.sources.size() != net.num_sources()) {
        out.push_back({"structure", "strategy", "expected " + std::to_string(net.num_sources()) + " source states, got " +
                                                    std::to_string(strat.sources.size())});
    }
    if (strat.parties.size() != net.num_parties()) {
        out.push_back({"structure", "strategy", "expected " + std::to_string(net.num_parties()) + " bases, got " +
                                                    std::to_string(strat.parties.size())});
    }
    if (!out.empty()) {
        return rep;
    }
    bool shapes_ok = true;
    for (size_t i = 0; i < net.num_sources(); i++) {
        const auto &s = strat.sources[i];
        std::string where = "source " + net.source_id(i);
        if (s.source != net.source_id(i)) {
            out.push_back({"structure", where, "state is labelled '" + s.source + "'"});
        }
        if (s.dims.size() != net.source_parties(i).size()) {
            out.push_back({"structure", where, "alphabet list does not match the source degree"});
            shapes_ok = false;
            continue;
        }
        for (int d : s.dims) {
            if (d < 1) {
                out.push_back({"structure", where, "wire alphabet size must be positive"});
                shapes_ok = false;
            }
        }
        if (!check_tuples(s.amplitudes, s.dims, where, out)) {
            continue;
        }
        double norm = 0;
        for (const auto &[t, a] : s.amplitudes) {
            norm += std::norm(a);
        }
        if (std::abs(norm - 1) > kNormTolerance) {
            std::ostringstream msg;
            msg.precision(17);
            msg << "squared amplitudes sum to " << norm;
            out.push_back({"normalization", where, msg.str()});
        }
        if (strat.kind == StrategyKind::color_matching) {
            for (const auto &[t, a] : s.amplitudes) {
                bool uniform = std::all_of(t.begin(), t.end(), [&](int v) { return v == t[0]; });
                if (std::abs(a) > 0 && !uniform) {
                    out.push_back({"color-sum", where, "support tuple " + tuple_string(t) + " is not a single color"});
                }
            }
        }
        if (strat.kind == StrategyKind::token_counting) {
            if (!s.tokens) {
                out.push_back({"token-sum", where, "token-counting source without a token count"});
            } else {
                for (const auto &[t, a] : s.amplitudes) {
                    int sum = 0;
                    for (int v : t) {
                        sum += v;
                    }
                    if (std::abs(a) > 0 && sum != *s.tokens) {
                        out.push_back({"token-sum", where, "support tuple " + tuple_string(t) + " distributes " +
                                                               std::to_string(sum) + " tokens"});
                    }
                }
            }
        }
    }
    if (!shapes_ok) {
        return rep;
    }
    for (size_t j = 0; j < net.num_parties(); j++) {
        const auto &basis = strat.parties[j];
        std::string where = "party " + net.party_id(j);
        if (basis.party != net.party_id(j)) {
            out.push_back({"structure", where, "basis is labelled '" + basis.party + "'"});
        }
        auto dims = party_dims(net, strat, j);
        size_t dim = 1;
        for (int d : dims) {
            dim *= static_cast<size_t>(d);
        }
        if (basis.vectors.size() != dim) {
            out.push_back({"completeness", where, "basis has " + std::to_string(basis.vectors.size()) +
                                                      " vectors, composite dimension is " + std::to_string(dim)});
        }
        bool tuples_ok = true;
        for (size_t a = 0; a < basis.vectors.size(); a++) {
            std::string vw = where + " vector " + std::to_string(a) + " [" + to_string(basis.vectors[a].label) + "]";
            tuples_ok = check_tuples(basis.vectors[a].amplitudes, dims, vw, out) && tuples_ok;
            check_label(basis.vectors[a], strat.kind, vw, out);
            for (size_t b = 0; b < a; b++) {
                if (basis.vectors[a].label == basis.vectors[b].label) {
                    out.push_back({"label", vw, "duplicates the label of vector " + std::to_string(b)});
                }
            }
        }
        if (!tuples_ok) {
            continue;
        }
        std::vector<std::map<SymbolTuple, Amplitude>> maps;
        for (const auto &v : basis.vectors) {
            maps.emplace_back(v.amplitudes.begin(), v.amplitudes.end());
        }
        for (size_t a = 0; a < basis.vectors.size(); a++) {
            for (size_t b = 0; b <= a; b++) {
                Amplitude g = inner(basis.vectors[b].amplitudes, maps[a]);
                double expect = a == b ? 1.0 : 0.0;
                if (std::abs(g - expect) > kOrthoTolerance) {
                    std::ostringstream msg;
                    msg.precision(17);
                    msg << "<v" << b << "|v" << a << "> = " << g.real() << (g.imag() < 0 ? "" : "+") << g.imag() << "i";
                    out.push_back({"orthonormality", where + " vectors " + std::to_string(b) + "," + std::to_string(a),
                                   msg.str()});
                }
            }
        }
    }
    return rep;
}

void require_valid(const Network &net, const QuantumStrategy &strat) {
    auto rep = validate_strategy(net, strat);
    if (rep.ok()) {
        return;
    }
    std::string msg = "invalid strategy:";
    for (size_t k = 0; k < rep.violations.size() && k < 5; k++) {
        const auto &v = rep.violations[k];
        msg += " [" + v.kind + "] " + v.where + ": " + v.detail + ";";
    }
    if (rep.violations.size() > 5) {
        msg += " ... " + std::to_string(rep.violations.size() - 5) + " more";
    }
    fail_input(msg);
}

double JointDistribution::total_mass() const {
    double s = 0;
    for (const auto &[k, p] : atoms) {
        s += p;
    }
    return s;
}

std::vector<OutcomeLabel> JointDistribution::labels_of(const std::vector<int> &key) const {
    std::vector<OutcomeLabel> out;
    for (size_t j = 0; j < key.size(); j++) {
        out.push_back(alphabets[j][static_cast<size_t>(key[j])]);
    }
    return out;
}

double JointDistribution::probability(const std::vector<OutcomeLabel> &labels) const {
    if (labels.size() != alphabets.size()) {
        return 0;
    }
    std::vector<int> key;
    for (size_t j = 0; j < labels.size(); j++) {
        auto it = std::find(alphabets[j].begin(), alphabets[j].end(), labels[j]);
        if (it == alphabets[j].end()) {
            return 0;
        }
        key.push_back(static_cast<int>(it - alphabets[j].begin()));
    }
    auto it = atoms.find(key);
    return it == atoms.end() ? 0 : it->second;
}

std::map<std::vector<OutcomeLabel>, double> JointDistribution::labeled() const {
    std::map<std::vector<OutcomeLabel>, double> out;
    for (const auto &[k, p] : atoms) {
        out[labels_of(k)] += p;
    }
    return out;
}

size_t party_dimension(const Network &net, const QuantumStrategy &strat, size_t party) {
    size_t dim = 1;
    for (int d : party_dims(net, strat, party)) {
        dim *= static_cast<size_t>(d);
    }
    return dim;
}

int symbol_for_party(const Network &net, size_t i, size_t j, const SymbolTuple &tuple) {
    return tuple[net.slot_in_source(i, j)];
}

Amplitude overlap(const BasisVector &v, const SymbolTuple &tuple) {
    for (const auto &[t, a] : v.amplitudes) {
        if (t == tuple) {
            return std::conj(a);
        }
    }
    return 0;
}

double source_weight(const SourceState &s, const SymbolTuple &tuple) {
    for (const auto &[t, a] : s.amplitudes) {
        if (t == tuple) {
            return std::norm(a);
        }
    }
    return 0;
}


JointDistribution joint_distribution(const Network &net, const QuantumStrategy &strat, uint64_t config_cap) {
    require_valid(net, strat);
    std::vector<std::vector<std::pair<SymbolTuple, Amplitude>>> supports;
    for (const auto &s : strat.sources) {
        std::vector<std::pair<SymbolTuple, Amplitude>> sup;
        for (const auto &[t, a] : s.amplitudes) {
            if (a != Amplitude(0)) {
                sup.emplace_back(t, a);
            }
        }
        supports.push_back(std::move(sup));
    }
    JointDistribution dist;
    std::vector<std::map<SymbolTuple, std::vector<std::pair<int, Amplitude>>>> responses(net.num_parties());
    std::vector<size_t> sizes;
    for (size_t j = 0; j < net.num_parties(); j++) {
        const auto &basis = strat.parties[j];
        std::vector<OutcomeLabel> alphabet;
        for (size_t a = 0; a < basis.vectors.size(); a++) {
            alphabet.push_back(basis.vectors[a].label);
            for (const auto &[t, amp] : basis.vectors[a].amplitudes) {
                if (amp != Amplitude(0)) {
                    responses[j][t].emplace_back(static_cast<int>(a), std::conj(amp));
                }
            }
        }
        sizes.push_back(alphabet.size());
        dist.alphabets.push_back(std::move(alphabet));
    }
    auto radix = detail_sim::radix_for(sizes);
    std::unordered_map<uint64_t, Amplitude> acc;
    detail_sim::contract<Amplitude, Amplitude>(net, supports, responses, radix, config_cap, false,
                                               [&](uint64_t key, Amplitude v) { acc[key] += v; });
    std::vector<std::pair<uint64_t, Amplitude>> sorted(acc.begin(), acc.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto &x, const auto &y) { return x.first < y.first; });
    for (const auto &[key, amp] : sorted) {
        double p = std::norm(amp);
        if (p >= kAtomCutoff) {
            dist.atoms.emplace(detail_sim::decode(key, radix), p);
        }
    }
    return dist;
}

JointDistribution coarse_grain(const JointDistribution &dist, const LabelProjection &projection) {
    JointDistribution out;
    std::vector<std::vector<int>> remap(dist.alphabets.size());
    for (size_t j = 0; j < dist.alphabets.size(); j++) {
        std::vector<OutcomeLabel> images;
        for (const auto &l : dist.alphabets[j]) {
            images.push_back(projection(j, l));
        }
        std::vector<OutcomeLabel> alphabet = images;
        std::sort(alphabet.begin(), alphabet.end());
        alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
        for (const auto &img : images) {
            remap[j].push_back(static_cast<int>(std::lower_bound(alphabet.begin(), alphabet.end(), img) - alphabet.begin()));
        }
        out.alphabets.push_back(std::move(alphabet));
    }
    for (const auto &[key, p] : dist.atoms) {
        std::vector<int> k(key.size());
        for (size_t j = 0; j < key.size(); j++) {
            k[j] = remap[j][static_cast<size_t>(key[j])];
        }
        out.atoms[k] += p;
    }
    return out;
}

JointDistribution coarse_grain(const JointDistribution &dist) {
    return coarse_grain(dist, [](size_t, const OutcomeLabel &l) { return coarse_label(l); });
}

ClassicalStrategy decohere(const Network &net, const QuantumStrategy &strat) {
    require_valid(net, strat);
    ClassicalStrategy out;
    for (const auto &s : strat.sources) {
        ClassicalSource cs{s.source, {}, {}};
        for (const auto &[t, a] : s.amplitudes) {
            double p = std::norm(a);
            if (p > 0) {
                cs.values.push_back(t);
                cs.probs.push_back(p);
            }
        }
        out.sources.push_back(std::move(cs));
    }
    for (size_t j = 0; j < net.num_parties(); j++) {
        const auto &basis = strat.parties[j];
        ClassicalParty cp;
        cp.party = basis.party;
        for (size_t a = 0; a < basis.vectors.size(); a++) {
            cp.outcomes.push_back(basis.vectors[a].label);
            for (const auto &[t, amp] : basis.vectors[a].amplitudes) {
                double p = std::norm(amp);
                if (p > 0) {
                    cp.response[t].emplace_back(static_cast<int>(a), p);
                }
            }
        }
        for_each_tuple(party_dims(net, strat, j), [&](const SymbolTuple &t) { cp.response[t]; });
        out.parties.push_back(std::move(cp));
    }
    return out;
}

}  // namespace netrigid
