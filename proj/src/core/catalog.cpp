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

#include "core/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "core/errors.hpp"

namespace netrigid {

namespace {

const double kInvSqrt2 = 1 / std::numbers::sqrt2;

BasisVector computational(OutcomeLabel label, SymbolTuple t) {
    return {std::move(label), {{std::move(t), Amplitude(1)}}};
}

/// sum_t row[t] |tuples[t]>
BasisVector superposed(OutcomeLabel label, const std::vector<Amplitude> &row, const std::vector<SymbolTuple> &tuples) {
    BasisVector v{std::move(label), {}};
    for (size_t t = 0; t < tuples.size(); t++) {
        v.amplitudes.emplace_back(tuples[t], row[t]);
    }
    return v;
}

SourceState single_token_pair(const std::string &id) {
    return {id, {2, 2}, 1, {{{0, 1}, Amplitude(kInvSqrt2)}, {{1, 0}, Amplitude(kInvSqrt2)}}};
}

SourceState uniform_colors(const std::string &id, int degree, int colors) {
    SourceState s{id, std::vector<int>(static_cast<size_t>(degree), colors), std::nullopt, {}};
    double a = 1 / std::sqrt(static_cast<double>(colors));
    for (int c = 0; c < colors; c++) {
        s.amplitudes.emplace_back(SymbolTuple(static_cast<size_t>(degree), c), Amplitude(a));
    }
    return s;
}

void require_count(const std::vector<CMatrix> &omega, size_t count, size_t dim, const std::string &what) {
    if (omega.size() != count) {
        fail_input(what + " needs " + std::to_string(count) + " coefficient matrices, got " + std::to_string(omega.size()));
    }
    for (size_t k = 0; k < count; k++) {
        require_unitary(omega[k], dim, what + " party " + std::to_string(k + 1));
    }
}

int parse_size(const std::string &name, size_t colon) {
    std::string digits = name.substr(colon + 1);
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) {
        fail_input("catalog name '" + name + "' needs a size, e.g. ring:5");
    }
    return std::stoi(digits);
}

}  // namespace

CMatrix RotationParams::r3() const {
    double c = std::cos(theta), s = std::sin(theta);
    return {{1, 0, 0}, {0, c, -s}, {0, s, c}};
}

CMatrix RotationParams::r2() const {
    double c = std::cos(theta), s = std::sin(theta);
    return {{c, -s}, {s, c}};
}

void require_unitary(const CMatrix &m, size_t dim, const std::string &what) {
    if (m.size() != dim) {
        fail_input(what + ": coefficient matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    for (const auto &row : m) {
        if (row.size() != dim) {
            fail_input(what + ": coefficient matrix must be " + std::to_string(dim) + "x" + std::to_string(dim));
        }
        for (const auto &x : row) {
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) {
                fail_input(what + ": non-finite coefficient");
            }
        }
    }
    for (size_t a = 0; a < dim; a++) {
        for (size_t b = 0; b < dim; b++) {
            Amplitude g = 0;
            for (size_t t = 0; t < dim; t++) {
                g += std::conj(m[a][t]) * m[b][t];
            }
            if (std::abs(g - Amplitude(a == b ? 1.0 : 0.0)) > 1e-12) {
                fail_input(what + ": coefficient rows are not orthonormal");
            }
        }
    }
}

CMatrix reflection_block(double lambda) {
    if (!(std::abs(lambda) <= 1)) {
        fail_input("lambda must lie in [-1, 1]");
    }
    double mu = std::sqrt(1 - lambda * lambda);
    return {{lambda, mu}, {mu, -lambda}};
}

CatalogInstance make_5_0_tc(const CMatrix &wa, const CMatrix &wb, const CMatrix &wc, const CMatrix &wd) {
    require_unitary(wa, 3, "5-0 party A");
    require_unitary(wb, 2, "5-0 party B");
    require_unitary(wc, 3, "5-0 party C");
    require_unitary(wd, 2, "5-0 party D");
    Network net = Network::create({"A", "B", "C", "D"},
                                  {{"AB", {"A", "B"}}, {"AC", {"A", "C"}}, {"AD", {"A", "D"}}, {"CB", {"C", "B"}}, {"CD", {"C", "D"}}},
                                  {{"A", {"AD", "AC", "AB"}}, {"B", {"AB", "CB"}}, {"C", {"CB", "AC", "CD"}}, {"D", {"CD", "AD"}}});
    QuantumStrategy s;
    s.kind = StrategyKind::token_counting;
    s.family = "5-0";
    for (size_t i = 0; i < net.num_sources(); i++) {
        s.sources.push_back(single_token_pair(net.source_id(i)));
    }
    // A: one token arrives from AD, AC or AB under patterns 1, 2, 3.
    MeasurementBasis a{"A", {}};
    a.vectors.push_back(computational(TokenCount{0, {}}, {0, 0, 0}));
    for (int i = 0; i < 3; i++) {
        a.vectors.push_back(superposed(TokenCount{1, i + 1}, wa[static_cast<size_t>(i)], {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    }
    for (SymbolTuple t : {SymbolTuple{1, 1, 0}, SymbolTuple{1, 0, 1}, SymbolTuple{0, 1, 1}}) {
        a.vectors.push_back(computational(RevealedTuple{t}, t));
    }
    a.vectors.push_back(computational(TokenCount{3, {}}, {1, 1, 1}));
    // B: pattern 2 routes like pattern 1, so B only distinguishes AB from CB.
    auto pair_basis = [](const std::string &id, const CMatrix &w) {
        MeasurementBasis b{id, {}};
        b.vectors.push_back(computational(TokenCount{0, {}}, {0, 0}));
        for (int j = 0; j < 2; j++) {
            b.vectors.push_back(superposed(TokenCount{1, j + 1}, w[static_cast<size_t>(j)], {{1, 0}, {0, 1}}));
        }
        b.vectors.push_back(computational(TokenCount{2, {}}, {1, 1}));
        return b;
    };
    MeasurementBasis c{"C", {}};
    c.vectors.push_back(computational(TokenCount{0, {}}, {0, 0, 0}));
    for (SymbolTuple t : {SymbolTuple{0, 0, 1}, SymbolTuple{0, 1, 0}, SymbolTuple{1, 0, 0}}) {
        c.vectors.push_back(computational(RevealedTuple{t}, t));
    }
    for (int k = 0; k < 3; k++) {
        c.vectors.push_back(superposed(TokenCount{2, k + 1}, wc[static_cast<size_t>(k)], {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}}));
    }
    c.vectors.push_back(computational(TokenCount{3, {}}, {1, 1, 1}));
    s.parties = {a, pair_basis("B", wb), c, pair_basis("D", wd)};
    return {std::move(net), std::move(s)};
}

CatalogInstance make_5_0_tc(const RotationParams &rot) {
    return make_5_0_tc(rot.r3(), rot.r2(), rot.r3(), rot.r2());
}

CatalogInstance make_ring_tc(int n, const std::vector<CMatrix> &omega) {
    Network net = build_ring(n);
    require_count(omega, static_cast<size_t>(n), 2, "ring");
    QuantumStrategy s;
    s.kind = StrategyKind::token_counting;
    s.family = "ring";
    for (size_t i = 0; i < net.num_sources(); i++) {
        s.sources.push_back(single_token_pair(net.source_id(i)));
    }
    for (size_t j = 0; j < net.num_parties(); j++) {
        MeasurementBasis b{net.party_id(j), {}};
        b.vectors.push_back(computational(TokenCount{0, {}}, {0, 0}));
        for (int r = 0; r < 2; r++) {
            // First qubit from S_{j-1}, second from S_j; pattern 1 routes S_j's token to A_j.
            b.vectors.push_back(superposed(TokenCount{1, r + 1}, omega[j][static_cast<size_t>(r)], {{0, 1}, {1, 0}}));
        }
        b.vectors.push_back(computational(TokenCount{2, {}}, {1, 1}));
        s.parties.push_back(std::move(b));
    }
    return {std::move(net), std::move(s)};
}

OutcomeLabel ring_cm_label(size_t party, const OutcomeLabel &tc_label) {
    bool flipped = party % 2 == 1;  // A_2, A_4, ...
    const auto &tc = std::get<TokenCount>(tc_label);
    if (tc.alpha) {
        return Ambiguous{tc.alpha};
    }
    int color = tc.n == 0 ? 0 : 1;
    return ColorMatch{flipped ? 1 - color : color};
}

CatalogInstance make_ring_cm(int n, const std::vector<CMatrix> &omega) {
    if (n % 2 != 0) {
        fail_input("the color-matching ring needs an even number of parties");
    }
    auto tc = make_ring_tc(n, omega);
    QuantumStrategy s;
    s.kind = StrategyKind::color_matching;
    s.family = "ring";
    for (size_t i = 0; i < tc.net.num_sources(); i++) {
        s.sources.push_back({tc.net.source_id(i), {2, 2}, std::nullopt,
                             {{{0, 0}, Amplitude(kInvSqrt2)}, {{1, 1}, Amplitude(kInvSqrt2)}}});
    }
    for (size_t j = 0; j < tc.net.num_parties(); j++) {
        bool flipped = j % 2 == 1;
        MeasurementBasis b{tc.net.party_id(j), {}};
        for (const auto &v : tc.strat.parties[j].vectors) {
            BasisVector w{ring_cm_label(j, v.label), {}};
            for (const auto &[t, a] : v.amplitudes) {
                w.amplitudes.emplace_back(flipped ? SymbolTuple{1 - t[0], 1 - t[1]} : t, a);
            }
            b.vectors.push_back(std::move(w));
        }
        s.parties.push_back(std::move(b));
    }
    return {std::move(tc.net), std::move(s)};
}

CatalogInstance make_1_2_cm(const std::vector<CMatrix> &omega) {
    require_count(omega, 4, 3, "1-2");
    Network net = Network::create({"A", "B", "C", "D"},
                                  {{"lambda", {"A", "D"}}, {"mu", {"A", "B", "C"}}, {"nu", {"B", "C", "D"}}},
                                  {{"A", {"lambda", "mu"}}, {"B", {"mu", "nu"}}, {"C", {"mu", "nu"}}, {"D", {"nu", "lambda"}}});
    QuantumStrategy s;
    s.kind = StrategyKind::color_matching;
    s.family = "1-2";
    s.sources = {uniform_colors("lambda", 2, 3), uniform_colors("mu", 3, 3), uniform_colors("nu", 3, 3)};
    // Revealed tuples (patterns 4-6) and ambiguous supports (patterns 1-3) per party.
    const std::vector<std::vector<SymbolTuple>> revealed = {
        {{2, 1}, {1, 0}, {0, 2}}, {{1, 0}, {0, 2}, {2, 1}}, {{1, 0}, {0, 2}, {2, 1}}, {{0, 2}, {2, 1}, {1, 0}}};
    const std::vector<std::vector<SymbolTuple>> ambiguous = {
        {{0, 1}, {1, 2}, {2, 0}}, {{1, 2}, {2, 0}, {0, 1}}, {{1, 2}, {2, 0}, {0, 1}}, {{2, 0}, {0, 1}, {1, 2}}};
    for (size_t j = 0; j < 4; j++) {
        MeasurementBasis b{net.party_id(j), {}};
        for (int c = 0; c < 3; c++) {
            b.vectors.push_back(computational(ColorMatch{c}, {c, c}));
        }
        for (const auto &t : revealed[j]) {
            b.vectors.push_back(computational(RevealedTuple{t}, t));
        }
        for (int i = 0; i < 3; i++) {
            b.vectors.push_back(superposed(Ambiguous{i + 1}, omega[j][static_cast<size_t>(i)], ambiguous[j]));
        }
        s.parties.push_back(std::move(b));
    }
    return {std::move(net), std::move(s)};
}

CatalogInstance make_complete_cm(int n, const std::vector<CMatrix> &omega) {
    if (n < 4) {
        fail_input("complete-network strategy needs n >= 4, got " + std::to_string(n));
    }
    Network net = build_complete(n);
    require_count(omega, static_cast<size_t>(n), 2, "complete network");
    QuantumStrategy s;
    s.kind = StrategyKind::color_matching;
    s.family = "kn";
    for (size_t i = 0; i < net.num_sources(); i++) {
        s.sources.push_back(uniform_colors(net.source_id(i), 2, 2));
    }
    size_t deg = static_cast<size_t>(n - 1);
    SymbolTuple b0(deg, 1), b1(deg, 0);
    b0.front() = b0.back() = 0;
    b1.front() = b1.back() = 1;
    for (size_t j = 0; j < net.num_parties(); j++) {
        MeasurementBasis b{net.party_id(j), {}};
        for (size_t x = 0; x < (size_t{1} << deg); x++) {
            SymbolTuple t(deg);
            for (size_t k = 0; k < deg; k++) {
                t[k] = static_cast<int>((x >> (deg - 1 - k)) & 1);
            }
            if (t == b0 || t == b1) {
                continue;
            }
            bool uniform = std::all_of(t.begin(), t.end(), [&](int v) { return v == t[0]; });
            b.vectors.push_back(uniform ? computational(ColorMatch{t[0]}, t) : computational(RevealedTuple{t}, t));
        }
        for (int r = 0; r < 2; r++) {
            b.vectors.push_back(superposed(Ambiguous{r + 1}, omega[j][static_cast<size_t>(r)], {b0, b1}));
        }
        s.parties.push_back(std::move(b));
    }
    return {std::move(net), std::move(s)};
}

CatalogInstance make_graph_coloring_cm(int n, const std::vector<CMatrix> &omega) {
    if (n < 5) {
        fail_input("graph-coloring strategy needs n >= 5, got " + std::to_string(n));
    }
    Network net = build_edge_network(n);
    require_count(omega, net.num_parties(), 2, "graph coloring");
    QuantumStrategy s;
    s.kind = StrategyKind::color_matching;
    s.family = "coloring";
    for (size_t i = 0; i < net.num_sources(); i++) {
        s.sources.push_back(uniform_colors(net.source_id(i), n - 1, n));
    }
    size_t k = 0;
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++, k++) {
            MeasurementBasis b{net.party_id(k), {}};
            // Colors are 1-based in the pair-sum rule and stored as symbols c - 1.
            int lo = i + j, hi = 2 * (n + 1) - (i + j);
            SymbolTuple p1{i - 1, j - 1}, p2{n - i, n - j};
            std::vector<SymbolTuple> rest;
            for (int a = 0; a < n; a++) {
                for (int c = 0; c < n; c++) {
                    int sum = a + c + 2;
                    if (a == c) {
                        b.vectors.push_back(computational(ColorMatch{a}, {a, a}));
                    } else if (sum != lo && sum != hi) {
                        b.vectors.push_back(computational(RevealedTuple{{a, c}}, {a, c}));
                    } else if (SymbolTuple{a, c} != p1 && SymbolTuple{a, c} != p2) {
                        rest.push_back({a, c});
                    }
                }
            }
            for (int r = 0; r < 2; r++) {
                b.vectors.push_back(superposed(Ambiguous{r + 1}, omega[k][static_cast<size_t>(r)], {p1, p2}));
            }
            for (size_t r = 0; r < rest.size(); r++) {
                b.vectors.push_back(computational(Ambiguous{static_cast<int>(r) + 3}, rest[r]));
            }
            s.parties.push_back(std::move(b));
        }
    }
    return {std::move(net), std::move(s)};
}

CatalogInstance make_catalog(const std::string &name, const CatalogParams &params) {
    auto colon = name.find(':');
    std::string family = name.substr(0, colon);
    bool two_pattern = family == "ring" || family == "ring-cm" || family == "kn" || family == "coloring";
    if (!two_pattern && (params.lambda || params.asymmetric)) {
        fail_input("lambda and asymmetric parameters apply to ring, ring-cm, kn and coloring only");
    }
    if (!std::isfinite(params.theta)) {
        fail_input("theta must be finite");
    }
    if (family == "5-0" && colon == std::string::npos) {
        return make_5_0_tc(RotationParams{params.theta});
    }
    if (family == "1-2" && colon == std::string::npos) {
        auto r = RotationParams{params.theta}.r3();
        return make_1_2_cm({r, r, r, r});
    }
    if (!two_pattern || colon == std::string::npos) {
        fail_input("unknown catalog name '" + name + "'");
    }
    int n = parse_size(name, colon);
    double lambda = params.lambda.value_or(std::sin(params.theta));
    size_t parties = family == "coloring" ? static_cast<size_t>(n * (n - 1) / 2) : static_cast<size_t>(n);
    std::vector<CMatrix> omega(parties, reflection_block(lambda));
    if (params.asymmetric && !omega.empty()) {
        omega.back() = reflection_block(kInvSqrt2);
    }
    if (family == "ring") {
        return make_ring_tc(n, omega);
    }
    if (family == "ring-cm") {
        return make_ring_cm(n, omega);
    }
    if (family == "kn") {
        return make_complete_cm(n, omega);
    }
    return make_graph_coloring_cm(n, omega);
}

std::vector<std::string> catalog_names() {
    return {"5-0", "ring:n", "ring-cm:n", "1-2", "kn:n", "coloring:n"};
}

}  // namespace netrigid
