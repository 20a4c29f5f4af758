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

#include "core/rigidity.hpp"

#include <algorithm>
#include <cmath>

#include "core/errors.hpp"

namespace netrigid {

namespace {

const std::set<std::string> kPublishedFamilies = {"5-0", "ring", "1-2", "kn", "coloring"};

constexpr double kConsistencyTolerance = 1e-10;

std::string labels_string(const std::vector<OutcomeLabel> &labels) {
    std::string s;
    for (size_t k = 0; k < labels.size(); k++) {
        if (k) {
            s += ",";
        }
        s += to_string(labels[k]);
    }
    return s;
}

/// Sources of party j each have a partner party with which they are the only common source.
bool exclusive_partners(const Network &net, size_t j) {
    for (size_t i : net.party_sources(j)) {
        bool found = false;
        for (size_t k : net.source_parties(i)) {
            if (k != j && net.common_sources(j, k).size() == 1) {
                found = true;
                break;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

/// Computational tuples present in a party's basis (revealed tuples and color matches).
std::set<SymbolTuple> computational_tuples(const Network &net, const MeasurementBasis &basis, size_t j) {
    std::set<SymbolTuple> out = revealed_tuples(basis);
    size_t deg = net.party_sources(j).size();
    for (const auto &v : basis.vectors) {
        if (const auto *m = std::get_if<ColorMatch>(&v.label)) {
            out.insert(SymbolTuple(deg, m->color));
        }
    }
    return out;
}

/// A global coloring extending `fixed` on party j's sources under which every party
/// receives a computational tuple of its basis.
bool has_computational_extension(const Network &net, const QuantumStrategy &strat, size_t j, const SymbolTuple &fixed) {
    int colors = 0;
    for (const auto &s : strat.sources) {
        for (int d : s.dims) {
            colors = std::max(colors, d);
        }
    }
    std::vector<std::set<SymbolTuple>> allowed;
    for (size_t k = 0; k < net.num_parties(); k++) {
        allowed.push_back(computational_tuples(net, strat.parties[k], k));
    }
    std::vector<int> assign(net.num_sources(), -1);
    auto js = net.party_sources(j);
    for (size_t k = 0; k < js.size(); k++) {
        assign[js[k]] = fixed[k];
    }
    std::vector<std::vector<size_t>> check_at(net.num_sources());
    for (size_t k = 0; k < net.num_parties(); k++) {
        auto src = net.party_sources(k);
        check_at[*std::max_element(src.begin(), src.end())].push_back(k);
    }
    std::vector<int> color(net.num_sources(), 0);
    auto search = [&](auto &&self, size_t i) -> bool {
        if (i == net.num_sources()) {
            return true;
        }
        int lo = assign[i] >= 0 ? assign[i] : 0;
        int hi = assign[i] >= 0 ? assign[i] + 1 : colors;
        for (int c = lo; c < hi; c++) {
            color[i] = c;
            bool ok = true;
            for (size_t k : check_at[i]) {
                SymbolTuple d;
                for (size_t s : net.party_sources(k)) {
                    d.push_back(color[s]);
                }
                if (!allowed[k].count(d)) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, i + 1)) {
                return true;
            }
        }
        return false;
    };
    return search(search, 0);
}

double pattern_probability(const QuantumStrategy &strat, const HiddenPattern &p) {
    double w = 1;
    for (size_t i = 0; i < strat.sources.size(); i++) {
        w *= source_weight(strat.sources[i], p.source_symbols[i]);
    }
    return w;
}

bool delivers_rigid_tuple(const Network &net, const HiddenPattern &p, const std::vector<std::set<SymbolTuple>> &rigid) {
    for (size_t j = 0; j < net.num_parties(); j++) {
        if (rigid[j].count(p.delivered(net, j))) {
            return true;
        }
    }
    return false;
}

std::vector<HiddenPattern> token_patterns(const Network &net, const QuantumStrategy &strat,
                                          const std::vector<std::vector<OutcomeLabel>> &alphabets,
                                          const std::vector<std::set<SymbolTuple>> &rigid) {
    std::vector<int> eta;
    for (const auto &s : strat.sources) {
        eta.push_back(*s.tokens);
    }
    std::vector<std::vector<int>> counts(net.num_parties());
    for (size_t j = 0; j < net.num_parties(); j++) {
        std::set<int> ns;
        for (const auto &l : alphabets[j]) {
            ns.insert(std::get<TokenCount>(l).n);
        }
        counts[j].assign(ns.begin(), ns.end());
    }
    std::vector<HiddenPattern> all;
    std::vector<int> target(net.num_parties());
    auto walk = [&](auto &&self, size_t j) -> void {
        if (j == net.num_parties()) {
            for (auto &p : enumerate_token_patterns(net, eta, target)) {
                all.push_back(std::move(p));
            }
            return;
        }
        for (int n : counts[j]) {
            target[j] = n;
            self(self, j + 1);
        }
    };
    walk(walk, 0);
    std::sort(all.begin(), all.end(),
              [](const HiddenPattern &a, const HiddenPattern &b) { return a.source_symbols < b.source_symbols; });
    std::vector<HiddenPattern> kept;
    for (auto &p : all) {
        if (pattern_probability(strat, p) > 0 && !delivers_rigid_tuple(net, p, rigid)) {
            kept.push_back(std::move(p));
        }
    }
    return kept;
}

std::vector<HiddenPattern> color_patterns(const Network &net, const QuantumStrategy &strat,
                                          const std::vector<std::set<SymbolTuple>> &rigid) {
    int colors = 0;
    for (const auto &s : strat.sources) {
        for (int d : s.dims) {
            colors = std::max(colors, d);
        }
    }
    std::vector<std::optional<ColorConstraint>> cons;
    for (size_t j = 0; j < net.num_parties(); j++) {
        cons.push_back(ColorConstraint{Ambiguous{}, rigid[j]});
    }
    std::vector<HiddenPattern> kept;
    for (auto &p : enumerate_color_patterns(net, colors, cons)) {
        if (pattern_probability(strat, p) > 0) {
            kept.push_back(std::move(p));
        }
    }
    return kept;
}

}  // namespace

bool Event::accepts(size_t party, const OutcomeLabel &label) const {
    if (!is_ambiguous(label)) {
        return false;
    }
    return !coarse || coarse_label(label) == (*coarse)[party];
}

std::string Event::describe() const {
    if (!coarse) {
        return "all parties ambiguous";
    }
    return "ambiguous outputs with coarse labels (" + labels_string(*coarse) + ")";
}

std::set<SymbolTuple> rigid_revealed_tuples(const Network &net, const QuantumStrategy &strat, size_t j) {
    auto revealed = revealed_tuples(strat.parties[j]);
    switch (strat.kind) {
        case StrategyKind::token_counting:
            return check_ndcs(net) ? revealed : std::set<SymbolTuple>{};
        case StrategyKind::color_matching: {
            if (exclusive_partners(net, j)) {
                return revealed;
            }
            std::set<SymbolTuple> out;
            for (const auto &t : revealed) {
                if (has_computational_extension(net, strat, j, t)) {
                    out.insert(t);
                }
            }
            return out;
        }
        case StrategyKind::generic:
            break;
    }
    return {};
}

QSystemSpec build_q_system(const Network &net, const QuantumStrategy &strat, const Event &event,
                           const QSystemOptions &options) {
    require_valid(net, strat);
    if (strat.kind == StrategyKind::generic) {
        fail_input("the q-system needs a token-counting or color-matching strategy");
    }
    size_t J = net.num_parties();
    if (event.coarse && event.coarse->size() != J) {
        fail_input("event needs one coarse label per party");
    }
    QSystemSpec spec;
    spec.event = event;
    for (size_t j = 0; j < J; j++) {
        spec.parties.push_back(net.party_id(j));
    }
    auto dist = joint_distribution(net, strat, options.config_cap);

    std::vector<std::vector<bool>> accepted(J);
    std::vector<std::vector<OutcomeLabel>> full_alphabets(J);
    for (size_t j = 0; j < J; j++) {
        for (const auto &l : dist.alphabets[j]) {
            accepted[j].push_back(event.accepts(j, l));
            if (accepted[j].back()) {
                full_alphabets[j].push_back(l);
            }
        }
        if (full_alphabets[j].empty()) {
            fail_input("event is impossible: party " + net.party_id(j) + " has no matching outcome");
        }
    }
    std::vector<std::vector<double>> label_mass(J);
    for (size_t j = 0; j < J; j++) {
        label_mass[j].assign(dist.alphabets[j].size(), 0.0);
    }
    double pr = 0;
    for (const auto &[key, p] : dist.atoms) {
        bool in = true;
        for (size_t j = 0; j < J && in; j++) {
            in = accepted[j][static_cast<size_t>(key[j])];
        }
        if (in) {
            pr += p;
            for (size_t j = 0; j < J; j++) {
                label_mass[j][static_cast<size_t>(key[j])] += p;
            }
        }
    }
    if (!(pr > kAtomCutoff)) {
        fail_input("conditioning event has zero probability");
    }
    spec.event_probability = pr;

    for (size_t j = 0; j < J; j++) {
        spec.rigid_revealed.push_back(rigid_revealed_tuples(net, strat, j));
    }
    spec.patterns = strat.kind == StrategyKind::token_counting ? token_patterns(net, strat, full_alphabets, spec.rigid_revealed)
                                                               : color_patterns(net, strat, spec.rigid_revealed);
    if (spec.patterns.empty()) {
        fail_input("no hidden pattern is consistent with the event");
    }
    for (size_t t = 0; t < spec.patterns.size(); t++) {
        spec.patterns[t].index = static_cast<int>(t) + 1;
        spec.pattern_probabilities.push_back(pattern_probability(strat, spec.patterns[t]));
    }
    double psum = 0;
    for (double p : spec.pattern_probabilities) {
        psum += p;
    }
    if (std::abs(psum - pr) > kConsistencyTolerance) {
        fail_input("pattern probabilities sum to " + std::to_string(psum) + " but the event has probability " +
                   std::to_string(pr) + "; the event is not explained by the hidden patterns");
    }

    // Event alphabets: drop labels that no pattern reaches and that carry no event mass.
    size_t T = spec.patterns.size();
    std::vector<std::vector<std::vector<double>>> ov(J);  // [j][kept label][t]
    for (size_t j = 0; j < J; j++) {
        std::vector<SymbolTuple> delivered;
        for (const auto &p : spec.patterns) {
            delivered.push_back(p.delivered(net, j));
        }
        spec.basis_index.emplace_back();
        spec.alphabets.emplace_back();
        for (size_t a = 0; a < dist.alphabets[j].size(); a++) {
            if (!accepted[j][a]) {
                continue;
            }
            std::vector<double> w(T);
            bool reached = false;
            for (size_t t = 0; t < T; t++) {
                w[t] = std::norm(overlap(strat.parties[j].vectors[a], delivered[t]));
                reached = reached || w[t] > 0;
            }
            if (!reached && label_mass[j][a] < kAtomCutoff) {
                spec.dropped_labels++;
                continue;
            }
            spec.basis_index[j].push_back(a);
            spec.alphabets[j].push_back(dist.alphabets[j][a]);
            ov[j].push_back(std::move(w));
        }
    }
    size_t tuples = 1;
    for (const auto &alpha : spec.alphabets) {
        if (tuples > options.max_variables / alpha.size()) {
            fail_capacity("q-system exceeds " + std::to_string(options.max_variables) + " variables");
        }
        tuples *= alpha.size();
    }
    if (tuples * T > options.max_variables) {
        fail_capacity("q-system exceeds " + std::to_string(options.max_variables) + " variables");
    }

    std::vector<int> o(J, 0), key(J);
    for (size_t n = 0; n < tuples; n++) {
        for (size_t j = 0; j < J; j++) {
            key[j] = static_cast<int>(spec.basis_index[j][static_cast<size_t>(o[j])]);
        }
        auto it = dist.atoms.find(key);
        spec.joint_targets[o] = it == dist.atoms.end() ? 0.0 : it->second / pr;
        for (size_t j = J; j-- > 0;) {
            if (static_cast<size_t>(++o[j]) < spec.alphabets[j].size()) {
                break;
            }
            o[j] = 0;
        }
    }

    for (size_t j = 0; j < J; j++) {
        for (size_t t = 0; t < T; t++) {
            double sum = 0;
            for (size_t a = 0; a < spec.alphabets[j].size(); a++) {
                double v = spec.pattern_probabilities[t] * ov[j][a][t] / pr;
                spec.marginals.push_back({j, a, t, v});
                sum += v;
            }
            double expect = spec.pattern_probabilities[t] / pr;
            if (std::abs(sum - expect) > kConsistencyTolerance) {
                fail_input("marginals of party " + net.party_id(j) + " at pattern " + std::to_string(t + 1) +
                           " sum to " + std::to_string(sum) + ", expected " + std::to_string(expect) +
                           "; the event alphabet does not span the delivered tuple");
            }
        }
    }

    if (options.product_marginals) {
        for (size_t omit = 0; omit < J; omit++) {
            std::vector<size_t> others;
            size_t count = 1;
            for (size_t k = 0; k < J; k++) {
                if (k != omit) {
                    others.push_back(k);
                    count *= spec.alphabets[k].size();
                }
            }
            for (size_t t = 0; t < T; t++) {
                std::vector<int> oo(others.size(), 0);
                for (size_t n = 0; n < count; n++) {
                    double v = spec.pattern_probabilities[t] / pr;
                    for (size_t k = 0; k < others.size(); k++) {
                        v *= ov[others[k]][static_cast<size_t>(oo[k])][t];
                    }
                    spec.product_targets.push_back({omit, t, oo, v});
                    for (size_t k = others.size(); k-- > 0;) {
                        if (static_cast<size_t>(++oo[k]) < spec.alphabets[others[k]].size()) {
                            break;
                        }
                        oo[k] = 0;
                    }
                }
            }
        }
    }
    spec.provenance = kPublishedFamilies.count(strat.family) && !options.product_marginals
                          ? "published family " + strat.family
                          : "heuristic, unproven";
    return spec;
}

FeasibilityProblem to_feasibility_problem(const QSystemSpec &spec) {
    FeasibilityProblem p;
    size_t J = spec.alphabets.size();
    size_t T = spec.patterns.size();
    auto label_tuple = [&](const std::vector<int> &o) {
        std::vector<OutcomeLabel> ls;
        for (size_t j = 0; j < J; j++) {
            ls.push_back(spec.alphabets[j][static_cast<size_t>(o[j])]);
        }
        return labels_string(ls);
    };
    // joint_targets iterates in lexicographic order, which fixes the variable layout.
    std::vector<const std::vector<int> *> tuples;
    for (const auto &[o, v] : spec.joint_targets) {
        tuples.push_back(&o);
        std::string name = label_tuple(o);
        for (size_t t = 0; t < T; t++) {
            p.variables.push_back("q(" + name + ";t=" + std::to_string(t + 1) + ")");
        }
    }
    size_t n_out = tuples.size();
    for (size_t n = 0; n < n_out; n++) {
        ConstraintRow row;
        for (size_t t = 0; t < T; t++) {
            row.coeffs.emplace_back(n * T + t, 1.0);
        }
        row.rhs = spec.joint_targets.at(*tuples[n]);
        row.tag = "joint q(" + label_tuple(*tuples[n]) + ")";
        p.rows.push_back(std::move(row));
    }
    // Marginal rows indexed by (party, label, pattern).
    std::vector<std::vector<size_t>> row_of(J);
    size_t first_marginal = p.rows.size();
    for (const auto &m : spec.marginals) {
        ConstraintRow row;
        row.rhs = m.value;
        row.tag = "marginal q(" + spec.parties[m.party] + "=" + to_string(spec.alphabets[m.party][m.label]) +
                  ";t=" + std::to_string(m.pattern + 1) + ")";
        p.rows.push_back(std::move(row));
    }
    auto marginal_row = [&](size_t j, size_t a, size_t t) {
        size_t offset = 0;
        for (size_t k = 0; k < j; k++) {
            offset += spec.alphabets[k].size() * T;
        }
        return first_marginal + offset + t * spec.alphabets[j].size() + a;
    };
    for (size_t n = 0; n < n_out; n++) {
        const auto &o = *tuples[n];
        for (size_t j = 0; j < J; j++) {
            for (size_t t = 0; t < T; t++) {
                p.rows[marginal_row(j, static_cast<size_t>(o[j]), t)].coeffs.emplace_back(n * T + t, 1.0);
            }
        }
    }
    if (!spec.product_targets.empty()) {
        std::map<std::tuple<size_t, size_t, std::vector<int>>, size_t> index;
        for (const auto &pt : spec.product_targets) {
            ConstraintRow row;
            row.rhs = pt.value;
            row.tag = "product q(omit " + spec.parties[pt.omitted] + ";t=" + std::to_string(pt.pattern + 1) + ")";
            index[{pt.omitted, pt.pattern, pt.others}] = p.rows.size();
            p.rows.push_back(std::move(row));
        }
        for (size_t n = 0; n < n_out; n++) {
            const auto &o = *tuples[n];
            for (size_t omit = 0; omit < J; omit++) {
                std::vector<int> others;
                for (size_t k = 0; k < J; k++) {
                    if (k != omit) {
                        others.push_back(o[k]);
                    }
                }
                for (size_t t = 0; t < T; t++) {
                    p.rows[index.at({omit, t, others})].coeffs.emplace_back(n * T + t, 1.0);
                }
            }
        }
    }
    ConstraintRow total;
    total.rhs = 1.0;
    total.tag = "normalization";
    for (size_t v = 0; v < p.variables.size(); v++) {
        total.coeffs.emplace_back(v, 1.0);
    }
    p.rows.push_back(std::move(total));
    return p;
}

FinnerResult finner_check(const Network &net, const JointDistribution &dist, const PfisWeights &weights,
                          const Indicator &indicator) {
    if (!is_valid_pfis(net, weights)) {
        fail_input("Finner check needs valid fractional independent set weights for the network");
    }
    size_t J = net.num_parties();
    if (dist.alphabets.size() != J) {
        fail_input("distribution does not match the network's party count");
    }
    std::vector<std::vector<bool>> g(J);
    for (size_t j = 0; j < J; j++) {
        for (const auto &l : dist.alphabets[j]) {
            g[j].push_back(indicator(j, l));
        }
    }
    FinnerResult r;
    std::vector<double> e(J, 0.0);
    for (const auto &[key, p] : dist.atoms) {
        bool all = true;
        for (size_t j = 0; j < J; j++) {
            if (g[j][static_cast<size_t>(key[j])]) {
                e[j] += p;
            } else {
                all = false;
            }
        }
        if (all) {
            r.lhs += p;
        }
    }
    r.rhs = 1;
    for (size_t j = 0; j < J; j++) {
        r.rhs *= std::pow(std::min(1.0, e[j]), weights.weights[j]);
    }
    r.gap = r.rhs - r.lhs;
    return r;
}

FinnerResult finner_check(const Network &net, const ClassicalStrategy &strat, const PfisWeights &weights,
                          const Indicator &indicator) {
    return finner_check(net, classical_joint(net, strat), weights, indicator);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::nonlocal:
            return "NONLOCAL";
        case Verdict::inconclusive:
            return "INCONCLUSIVE";
        case Verdict::refused:
            return "REFUSED";
        case Verdict::indeterminate:
            return "INDETERMINATE";
    }
    return "REFUSED";
}

HypothesisCheck check_hypotheses(const Network &net, const QuantumStrategy &strat) {
    HypothesisCheck h;
    h.ndcs = check_ndcs(net);
    h.ecs = check_ecs(net);
    h.pfis = find_pfis(net);
    h.kind = strat.kind;
    switch (strat.kind) {
        case StrategyKind::token_counting:
            h.satisfied = h.ndcs;
            h.statement = h.ndcs ? "token-counting strategy on an NDCS network: token-counting rigidity applies"
                                 : "token-counting strategy on a network that is not NDCS: rigidity unproven";
            break;
        case StrategyKind::color_matching:
            h.satisfied = h.ecs && h.pfis.has_value();
            if (h.satisfied) {
                h.statement = "color-matching strategy on an ECS network with a PFIS: color-matching rigidity applies";
            } else if (!h.ecs) {
                h.statement = "color-matching strategy on a network that is not ECS: rigidity unproven";
            } else {
                h.statement = "color-matching strategy on an ECS network without a PFIS: rigidity unproven";
            }
            break;
        case StrategyKind::generic:
            h.statement = "strategy is neither token-counting nor color-matching: no rigidity statement applies";
            break;
    }
    return h;
}

CertificationReport certify_nonlocality(const Network &net, const QuantumStrategy &strat, const Event &event,
                                        const QSystemOptions &options) {
    CertificationReport rep;
    require_valid(net, strat);
    rep.hypotheses = check_hypotheses(net, strat);
    if (!rep.hypotheses.satisfied) {
        rep.verdict = Verdict::refused;
        rep.message = rep.hypotheses.statement;
        return rep;
    }
    rep.system = build_q_system(net, strat, event, options);
    rep.problem = to_feasibility_problem(*rep.system);
    try {
        rep.result = solve_feasibility(*rep.problem, &rep.stats);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::indeterminate) {
            throw;
        }
        rep.verdict = Verdict::indeterminate;
        rep.message = e.what();
        return rep;
    }
    rep.verified = verify_certificate(*rep.problem, *rep.result);
    if (std::holds_alternative<Infeasible>(*rep.result)) {
        rep.verdict = Verdict::nonlocal;
        rep.message = "rigidity LP is infeasible: no classical strategy reproduces the distribution";
    } else {
        rep.verdict = Verdict::inconclusive;
        rep.message = "rigidity LP is feasible: the marginal constraints do not exclude a classical model";
    }
    return rep;
}

}  // namespace netrigid
