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

#include "core/serialize.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace netrigid {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

const Json &member(const Json &j, const char *key, const std::string &where) {
    if (!j.is_object()) {
        fail_input(where + ": expected an object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        fail_input(where + ": missing \"" + key + "\"");
    }
    return *it;
}

const Json &array_member(const Json &j, const char *key, const std::string &where) {
    const Json &a = member(j, key, where);
    if (!a.is_array()) {
        fail_input(where + ": \"" + key + "\" must be an array");
    }
    return a;
}

std::string as_string(const Json &j, const std::string &where) {
    if (!j.is_string()) {
        fail_input(where + ": expected a string");
    }
    return j.get<std::string>();
}

int as_int(const Json &j, const std::string &where) {
    if (!j.is_number_integer()) {
        fail_input(where + ": expected an integer");
    }
    return j.get<int>();
}

double as_double(const Json &j, const std::string &where) {
    if (!j.is_number()) {
        fail_input(where + ": expected a number");
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
        fail_input(where + ": non-finite number");
    }
    return v;
}

SymbolTuple as_tuple(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        fail_input(where + ": expected an array of integers");
    }
    SymbolTuple t;
    for (size_t k = 0; k < j.size(); k++) {
        t.push_back(as_int(j[k], where + "[" + std::to_string(k) + "]"));
    }
    return t;
}

const char *kind_name(StrategyKind k) {
    switch (k) {
        case StrategyKind::token_counting:
            return "token_counting";
        case StrategyKind::color_matching:
            return "color_matching";
        case StrategyKind::generic:
            return "generic";
    }
    return "generic";
}

StrategyKind kind_from_name(const std::string &s) {
    if (s == "token_counting") {
        return StrategyKind::token_counting;
    }
    if (s == "color_matching") {
        return StrategyKind::color_matching;
    }
    if (s == "generic") {
        return StrategyKind::generic;
    }
    fail_input("strategy kind must be token_counting, color_matching or generic, got '" + s + "'");
}

Json amplitudes_json(const AmplitudeMap &amps) {
    Json a = Json::array();
    for (const auto &[tuple, v] : amps) {
        a.push_back({{"tuple", tuple}, {"re", v.real()}, {"im", v.imag()}});
    }
    return a;
}

AmplitudeMap amplitudes_from(const Json &j, const std::string &where) {
    if (!j.is_array()) {
        fail_input(where + ": amplitudes must be an array");
    }
    AmplitudeMap out;
    for (size_t k = 0; k < j.size(); k++) {
        std::string w = where + "[" + std::to_string(k) + "]";
        const Json &e = j[k];
        SymbolTuple t = as_tuple(member(e, "tuple", w), w + ".tuple");
        double re = e.contains("re") ? as_double(e["re"], w + ".re") : 0.0;
        double im = e.contains("im") ? as_double(e["im"], w + ".im") : 0.0;
        out.emplace_back(std::move(t), Amplitude(re, im));
    }
    return out;
}

/// Objects of `arr` keyed by their "id", matched against the ids the network expects.
std::vector<const Json *> align_by_id(const Json &arr, const std::vector<std::string> &ids, const std::string &what) {
    std::map<std::string, const Json *> by_id;
    for (size_t k = 0; k < arr.size(); k++) {
        std::string id = as_string(member(arr[k], "id", what + "[" + std::to_string(k) + "]"), what + ".id");
        if (!by_id.emplace(id, &arr[k]).second) {
            fail_input(what + ": duplicate id '" + id + "'");
        }
    }
    std::vector<const Json *> out;
    for (const auto &id : ids) {
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            fail_input(what + ": no entry for '" + id + "'");
        }
        out.push_back(it->second);
        by_id.erase(it);
    }
    if (!by_id.empty()) {
        fail_input(what + ": unknown id '" + by_id.begin()->first + "'");
    }
    return out;
}

std::vector<std::string> party_ids(const Network &net) {
    std::vector<std::string> ids;
    for (size_t j = 0; j < net.num_parties(); j++) {
        ids.push_back(net.party_id(j));
    }
    return ids;
}

std::vector<std::string> source_ids(const Network &net) {
    std::vector<std::string> ids;
    for (size_t i = 0; i < net.num_sources(); i++) {
        ids.push_back(net.source_id(i));
    }
    return ids;
}

Json pfis_json(const Network &net, const std::optional<PfisWeights> &w) {
    if (!w) {
        return nullptr;
    }
    Json o = Json::object();
    for (size_t j = 0; j < net.num_parties(); j++) {
        o[net.party_id(j)] = w->weights[j];
    }
    return o;
}

}  // namespace

Json parse_json(const std::string &text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error &e) {
        fail_input(std::string("malformed JSON: ") + e.what());
    }
}

Json to_json(const OutcomeLabel &label) {
    return std::visit(overloaded{
                          [](const TokenCount &t) {
                              Json j = {{"kind", "token"}, {"n", t.n}};
                              if (t.alpha) {
                                  j["alpha"] = *t.alpha;
                              }
                              return j;
                          },
                          [](const ColorMatch &c) { return Json{{"kind", "match"}, {"color", c.color}}; },
                          [](const RevealedTuple &r) { return Json{{"kind", "revealed"}, {"symbols", r.symbols}}; },
                          [](const Ambiguous &a) {
                              Json j = {{"kind", "ambiguous"}};
                              if (a.index) {
                                  j["index"] = *a.index;
                              }
                              return j;
                          },
                      },
                      label);
}

OutcomeLabel label_from_json(const Json &j) {
    std::string kind = as_string(member(j, "kind", "label"), "label.kind");
    if (kind == "token") {
        TokenCount t{as_int(member(j, "n", "label"), "label.n"), std::nullopt};
        if (j.contains("alpha")) {
            t.alpha = as_int(j["alpha"], "label.alpha");
        }
        return t;
    }
    if (kind == "match") {
        return ColorMatch{as_int(member(j, "color", "label"), "label.color")};
    }
    if (kind == "revealed") {
        return RevealedTuple{as_tuple(member(j, "symbols", "label"), "label.symbols")};
    }
    if (kind == "ambiguous") {
        Ambiguous a;
        if (j.contains("index")) {
            a.index = as_int(j["index"], "label.index");
        }
        return a;
    }
    fail_input("label.kind must be token, match, revealed or ambiguous, got '" + kind + "'");
}

Json to_json(const Network &net) {
    Json sources = Json::array();
    Json order = Json::object();
    for (size_t i = 0; i < net.num_sources(); i++) {
        Json parties = Json::array();
        for (size_t j : net.source_parties(i)) {
            parties.push_back(net.party_id(j));
        }
        sources.push_back({{"id", net.source_id(i)}, {"parties", parties}});
    }
    for (size_t j = 0; j < net.num_parties(); j++) {
        Json srcs = Json::array();
        for (size_t i : net.party_sources(j)) {
            srcs.push_back(net.source_id(i));
        }
        order[net.party_id(j)] = srcs;
    }
    Json out = {{"parties", party_ids(net)}, {"sources", sources}, {"party_order", order}};
    if (!net.redundant_pairs().empty()) {
        out["allow_redundant"] = true;
    }
    return out;
}

Network network_from_json(const Json &j) {
    const Json &jp = array_member(j, "parties", "network");
    std::vector<std::string> parties;
    for (size_t k = 0; k < jp.size(); k++) {
        parties.push_back(as_string(jp[k], "network.parties[" + std::to_string(k) + "]"));
    }
    const Json &js = array_member(j, "sources", "network");
    std::vector<SourceSpec> sources;
    for (size_t k = 0; k < js.size(); k++) {
        std::string w = "network.sources[" + std::to_string(k) + "]";
        SourceSpec s;
        s.id = as_string(member(js[k], "id", w), w + ".id");
        const Json &sp = array_member(js[k], "parties", w);
        for (size_t m = 0; m < sp.size(); m++) {
            s.parties.push_back(as_string(sp[m], w + ".parties"));
        }
        sources.push_back(std::move(s));
    }
    std::map<std::string, std::vector<std::string>> order;
    if (j.contains("party_order")) {
        const Json &jo = j["party_order"];
        if (!jo.is_object()) {
            fail_input("network.party_order must be an object");
        }
        for (const auto &[party, list] : jo.items()) {
            if (!list.is_array()) {
                fail_input("network.party_order." + party + " must be an array");
            }
            auto &dst = order[party];
            for (const auto &s : list) {
                dst.push_back(as_string(s, "network.party_order." + party));
            }
        }
    }
    auto policy = Network::RedundancyPolicy::reject;
    if (j.contains("allow_redundant")) {
        if (!j["allow_redundant"].is_boolean()) {
            fail_input("network.allow_redundant must be a boolean");
        }
        if (j["allow_redundant"].get<bool>()) {
            policy = Network::RedundancyPolicy::allow;
        }
    }
    return Network::create(std::move(parties), std::move(sources), order, policy);
}

Json to_json(const QuantumStrategy &strat) {
    Json sources = Json::array();
    for (const auto &s : strat.sources) {
        Json js = {{"id", s.source}, {"dims", s.dims}, {"amplitudes", amplitudes_json(s.amplitudes)}};
        if (s.tokens) {
            js["tokens"] = *s.tokens;
        }
        sources.push_back(std::move(js));
    }
    Json parties = Json::array();
    for (const auto &p : strat.parties) {
        Json basis = Json::array();
        for (const auto &v : p.vectors) {
            basis.push_back({{"label", to_json(v.label)}, {"amplitudes", amplitudes_json(v.amplitudes)}});
        }
        parties.push_back({{"id", p.party}, {"basis", basis}});
    }
    Json out = {{"kind", kind_name(strat.kind)}, {"sources", sources}, {"parties", parties}};
    if (!strat.family.empty()) {
        out["family"] = strat.family;
    }
    return out;
}

QuantumStrategy strategy_from_json(const Network &net, const Json &j) {
    QuantumStrategy strat;
    if (j.contains("kind")) {
        strat.kind = kind_from_name(as_string(j["kind"], "strategy.kind"));
    }
    if (j.contains("family")) {
        strat.family = as_string(j["family"], "strategy.family");
    }
    auto jsrc = align_by_id(array_member(j, "sources", "strategy"), source_ids(net), "strategy.sources");
    auto jpar = align_by_id(array_member(j, "parties", "strategy"), party_ids(net), "strategy.parties");

    for (size_t jj = 0; jj < net.num_parties(); jj++) {
        std::string w = "strategy.parties." + net.party_id(jj);
        MeasurementBasis b;
        b.party = net.party_id(jj);
        const Json &basis = array_member(*jpar[jj], "basis", w);
        for (size_t k = 0; k < basis.size(); k++) {
            std::string wv = w + ".basis[" + std::to_string(k) + "]";
            BasisVector v;
            v.label = label_from_json(member(basis[k], "label", wv));
            v.amplitudes = amplitudes_from(member(basis[k], "amplitudes", wv), wv + ".amplitudes");
            b.vectors.push_back(std::move(v));
        }
        strat.parties.push_back(std::move(b));
    }

    for (size_t i = 0; i < net.num_sources(); i++) {
        std::string w = "strategy.sources." + net.source_id(i);
        const Json &js = *jsrc[i];
        SourceState s;
        s.source = net.source_id(i);
        s.amplitudes = amplitudes_from(member(js, "amplitudes", w), w + ".amplitudes");
        auto parties = net.source_parties(i);
        if (js.contains("dims")) {
            s.dims = as_tuple(js["dims"], w + ".dims");
        } else {
            std::vector<int> top(parties.size(), 0);
            for (const auto &[t, a] : s.amplitudes) {
                if (t.size() != parties.size()) {
                    fail_input(w + ": tuple " + tuple_string(t) + " has the wrong length");
                }
                for (size_t m = 0; m < t.size(); m++) {
                    top[m] = std::max(top[m], t[m]);
                }
            }
            for (size_t m = 0; m < parties.size(); m++) {
                size_t jj = parties[m];
                size_t slot = net.slot_in_party(jj, i);
                for (const auto &v : strat.parties[jj].vectors) {
                    for (const auto &[t, a] : v.amplitudes) {
                        if (slot < t.size()) {
                            top[m] = std::max(top[m], t[slot]);
                        }
                    }
                }
            }
            for (int d : top) {
                s.dims.push_back(d + 1);
            }
        }
        if (js.contains("tokens")) {
            s.tokens = as_int(js["tokens"], w + ".tokens");
        } else if (strat.kind == StrategyKind::token_counting && !s.amplitudes.empty()) {
            int sum = 0;
            for (int x : s.amplitudes.front().first) {
                sum += x;
            }
            s.tokens = sum;
        }
        strat.sources.push_back(std::move(s));
    }
    return strat;
}

Json to_json(const ClassicalStrategy &strat) {
    Json sources = Json::array();
    for (const auto &s : strat.sources) {
        Json values = Json::array();
        for (size_t k = 0; k < s.values.size(); k++) {
            values.push_back({{"tuple", s.values[k]}, {"p", s.probs[k]}});
        }
        sources.push_back({{"id", s.source}, {"values", values}});
    }
    Json parties = Json::array();
    for (const auto &p : strat.parties) {
        Json outcomes = Json::array();
        for (const auto &l : p.outcomes) {
            outcomes.push_back(to_json(l));
        }
        Json response = Json::array();
        for (const auto &[input, pmf] : p.response) {
            Json jp = Json::array();
            for (const auto &[o, pr] : pmf) {
                jp.push_back({{"outcome", o}, {"p", pr}});
            }
            response.push_back({{"input", input}, {"pmf", jp}});
        }
        parties.push_back({{"id", p.party}, {"outcomes", outcomes}, {"response", response}});
    }
    return {{"sources", sources}, {"parties", parties}};
}

ClassicalStrategy classical_from_json(const Network &net, const Json &j) {
    ClassicalStrategy strat;
    auto jsrc = align_by_id(array_member(j, "sources", "classical"), source_ids(net), "classical.sources");
    auto jpar = align_by_id(array_member(j, "parties", "classical"), party_ids(net), "classical.parties");
    for (size_t i = 0; i < net.num_sources(); i++) {
        std::string w = "classical.sources." + net.source_id(i);
        ClassicalSource s;
        s.source = net.source_id(i);
        const Json &values = array_member(*jsrc[i], "values", w);
        for (size_t k = 0; k < values.size(); k++) {
            std::string wv = w + ".values[" + std::to_string(k) + "]";
            s.values.push_back(as_tuple(member(values[k], "tuple", wv), wv + ".tuple"));
            s.probs.push_back(as_double(member(values[k], "p", wv), wv + ".p"));
        }
        strat.sources.push_back(std::move(s));
    }
    for (size_t jj = 0; jj < net.num_parties(); jj++) {
        std::string w = "classical.parties." + net.party_id(jj);
        ClassicalParty p;
        p.party = net.party_id(jj);
        for (const auto &l : array_member(*jpar[jj], "outcomes", w)) {
            p.outcomes.push_back(label_from_json(l));
        }
        const Json &response = array_member(*jpar[jj], "response", w);
        for (size_t k = 0; k < response.size(); k++) {
            std::string wr = w + ".response[" + std::to_string(k) + "]";
            SymbolTuple input = as_tuple(member(response[k], "input", wr), wr + ".input");
            std::vector<std::pair<int, double>> pmf;
            const Json &jp = array_member(response[k], "pmf", wr);
            for (size_t m = 0; m < jp.size(); m++) {
                std::string wp = wr + ".pmf[" + std::to_string(m) + "]";
                pmf.emplace_back(as_int(member(jp[m], "outcome", wp), wp + ".outcome"),
                                 as_double(member(jp[m], "p", wp), wp + ".p"));
            }
            if (!p.response.emplace(std::move(input), std::move(pmf)).second) {
                fail_input(wr + ": duplicate input tuple");
            }
        }
        strat.parties.push_back(std::move(p));
    }
    validate_classical(net, strat);
    return strat;
}

Json to_json(const Network &net, const JointDistribution &dist) {
    Json alphabets = Json::array();
    for (const auto &alpha : dist.alphabets) {
        Json a = Json::array();
        for (const auto &l : alpha) {
            a.push_back(to_json(l));
        }
        alphabets.push_back(std::move(a));
    }
    Json atoms = Json::array();
    for (const auto &[key, p] : dist.atoms) {
        Json outputs = Json::array();
        for (size_t j = 0; j < key.size(); j++) {
            outputs.push_back(to_string(dist.alphabets[j][key[j]]));
        }
        atoms.push_back({{"outputs", outputs}, {"p", p}});
    }
    return {{"parties", party_ids(net)}, {"alphabets", alphabets}, {"atoms", atoms}};
}

JointDistribution distribution_from_json(const Network &net, const Json &j) {
    const Json &jp = array_member(j, "parties", "distribution");
    if (jp.size() != net.num_parties()) {
        fail_input("distribution.parties does not match the network");
    }
    for (size_t k = 0; k < jp.size(); k++) {
        if (as_string(jp[k], "distribution.parties") != net.party_id(k)) {
            fail_input("distribution.parties must list the network's parties in order");
        }
    }
    JointDistribution dist;
    const Json &ja = array_member(j, "alphabets", "distribution");
    if (ja.size() != net.num_parties()) {
        fail_input("distribution.alphabets needs one alphabet per party");
    }
    std::vector<std::map<std::string, int>> lookup(ja.size());
    for (size_t k = 0; k < ja.size(); k++) {
        if (!ja[k].is_array()) {
            fail_input("distribution.alphabets entries must be arrays");
        }
        std::vector<OutcomeLabel> alpha;
        for (const auto &l : ja[k]) {
            alpha.push_back(label_from_json(l));
            if (!lookup[k].emplace(to_string(alpha.back()), static_cast<int>(alpha.size()) - 1).second) {
                fail_input("distribution.alphabets: duplicate label " + to_string(alpha.back()) + " for party " +
                           net.party_id(k));
            }
        }
        dist.alphabets.push_back(std::move(alpha));
    }
    const Json &atoms = array_member(j, "atoms", "distribution");
    for (size_t k = 0; k < atoms.size(); k++) {
        std::string w = "distribution.atoms[" + std::to_string(k) + "]";
        const Json &out = array_member(atoms[k], "outputs", w);
        if (out.size() != net.num_parties()) {
            fail_input(w + ": needs one output per party");
        }
        std::vector<int> key;
        for (size_t m = 0; m < out.size(); m++) {
            std::string s = as_string(out[m], w + ".outputs");
            auto it = lookup[m].find(s);
            if (it == lookup[m].end()) {
                fail_input(w + ": label '" + s + "' is not in the alphabet of " + net.party_id(m));
            }
            key.push_back(it->second);
        }
        double p = as_double(member(atoms[k], "p", w), w + ".p");
        if (p < 0) {
            fail_input(w + ": negative probability");
        }
        dist.atoms[key] += p;
    }
    return dist;
}

Json to_json(const FeasibilityProblem &p) {
    Json rows = Json::array();
    for (const auto &r : p.rows) {
        Json coeffs = Json::array();
        for (const auto &[v, c] : r.coeffs) {
            coeffs.push_back(Json::array({v, c}));
        }
        rows.push_back({{"tag", r.tag}, {"rhs", r.rhs}, {"coeffs", coeffs}});
    }
    return {{"variables", p.variables}, {"rows", rows}};
}

FeasibilityProblem problem_from_json(const Json &j) {
    FeasibilityProblem p;
    const Json &vars = array_member(j, "variables", "problem");
    for (size_t k = 0; k < vars.size(); k++) {
        p.variables.push_back(as_string(vars[k], "problem.variables"));
    }
    const Json &rows = array_member(j, "rows", "problem");
    for (size_t k = 0; k < rows.size(); k++) {
        std::string w = "problem.rows[" + std::to_string(k) + "]";
        ConstraintRow r;
        if (rows[k].contains("tag")) {
            r.tag = as_string(rows[k]["tag"], w + ".tag");
        }
        r.rhs = as_double(member(rows[k], "rhs", w), w + ".rhs");
        for (const auto &c : array_member(rows[k], "coeffs", w)) {
            if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned()) {
                fail_input(w + ": coefficients must be [variable index, value] pairs");
            }
            r.coeffs.emplace_back(c[0].get<size_t>(), as_double(c[1], w + ".coeffs"));
        }
        p.rows.push_back(std::move(r));
    }
    validate_problem(p);
    return p;
}

Json to_json(const FeasibilityProblem &p, const FeasibilityResult &r) {
    return std::visit(overloaded{
                          [&](const Feasible &f) {
                              Json w = Json::array();
                              for (size_t v = 0; v < f.witness.size(); v++) {
                                  if (f.witness[v] != 0) {
                                      w.push_back({{"index", v}, {"variable", p.variables[v]}, {"value", f.witness[v]}});
                                  }
                              }
                              return Json{{"status", "feasible"}, {"witness", w}};
                          },
                          [&](const Infeasible &inf) {
                              Json c = Json::array();
                              for (size_t k = 0; k < inf.certificate.size(); k++) {
                                  if (inf.certificate[k] != 0) {
                                      c.push_back({{"row", k}, {"tag", p.rows[k].tag}, {"y", inf.certificate[k]}});
                                  }
                              }
                              return Json{{"status", "infeasible"}, {"margin", inf.margin}, {"certificate", c}};
                          },
                      },
                      r);
}

FeasibilityResult result_from_json(const FeasibilityProblem &p, const Json &j) {
    std::string status = as_string(member(j, "status", "result"), "result.status");
    if (status == "feasible") {
        Feasible f{std::vector<double>(p.variables.size(), 0.0)};
        for (const auto &e : array_member(j, "witness", "result")) {
            int v = as_int(member(e, "index", "result.witness"), "result.witness.index");
            if (v < 0 || static_cast<size_t>(v) >= f.witness.size()) {
                fail_input("result.witness: variable index out of range");
            }
            f.witness[v] = as_double(member(e, "value", "result.witness"), "result.witness.value");
        }
        return f;
    }
    if (status == "infeasible") {
        Infeasible inf{std::vector<double>(p.rows.size(), 0.0),
                       as_double(member(j, "margin", "result"), "result.margin")};
        for (const auto &e : array_member(j, "certificate", "result")) {
            int k = as_int(member(e, "row", "result.certificate"), "result.certificate.row");
            if (k < 0 || static_cast<size_t>(k) >= inf.certificate.size()) {
                fail_input("result.certificate: row index out of range");
            }
            inf.certificate[k] = as_double(member(e, "y", "result.certificate"), "result.certificate.y");
        }
        return inf;
    }
    fail_input("result.status must be feasible or infeasible, got '" + status + "'");
}

Json to_json(const Network &net, const HiddenPattern &pattern) {
    Json j = {{"index", pattern.index}};
    if (pattern.kind == PatternKind::token_routing) {
        Json routing = Json::object();
        for (size_t i = 0; i < net.num_sources(); i++) {
            Json per = Json::object();
            auto parties = net.source_parties(i);
            for (size_t m = 0; m < parties.size(); m++) {
                per[net.party_id(parties[m])] = pattern.source_symbols[i][m];
            }
            routing[net.source_id(i)] = per;
        }
        j["kind"] = "token_routing";
        j["routing"] = routing;
    } else {
        Json colors = Json::object();
        for (size_t i = 0; i < net.num_sources(); i++) {
            colors[net.source_id(i)] = pattern.colors[i];
        }
        j["kind"] = "coloring";
        j["colors"] = colors;
    }
    return j;
}

Json to_json(const Network &net, const CertificationReport &rep) {
    const auto &h = rep.hypotheses;
    Json out = {
        {"verdict", to_string(rep.verdict)},
        {"message", rep.message},
        {"verified", rep.verified},
        {"hypotheses",
         {{"ndcs", h.ndcs},
          {"ecs", h.ecs},
          {"pfis", pfis_json(net, h.pfis)},
          {"strategy_kind", kind_name(h.kind)},
          {"satisfied", h.satisfied},
          {"statement", h.statement}}},
    };
    if (rep.system) {
        const auto &s = *rep.system;
        Json patterns = Json::array();
        for (size_t t = 0; t < s.patterns.size(); t++) {
            Json jt = to_json(net, s.patterns[t]);
            jt["p_dec"] = s.pattern_probabilities[t];
            patterns.push_back(std::move(jt));
        }
        out["event"] = s.event.describe();
        out["event_probability"] = s.event_probability;
        out["provenance"] = s.provenance;
        out["patterns"] = patterns;
        out["dropped_labels"] = s.dropped_labels;
    }
    if (rep.problem) {
        out["lp"] = {{"variables", rep.problem->variables.size()},
                     {"rows", rep.problem->rows.size()},
                     {"pivots", rep.stats.pivots},
                     {"bland_pivots", rep.stats.bland_pivots}};
    }
    if (rep.result) {
        out["result"] = to_json(*rep.problem, *rep.result);
        if (const auto *inf = std::get_if<Infeasible>(&*rep.result)) {
            out["margin"] = inf->margin;
        }
    }
    return out;
}

}  // namespace netrigid
