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

#include <gtest/gtest.h>

#include <functional>

#include "core/catalog.hpp"
#include "core/classical.hpp"
#include "core/errors.hpp"
#include "core/rigidity.hpp"

namespace netrigid {
namespace {

CatalogInstance catalog(const std::string &name) {
    return make_catalog(name, {});
}

std::vector<std::optional<ColorConstraint>> all_ambiguous(const Network &net, const QuantumStrategy *strat) {
    std::vector<std::optional<ColorConstraint>> c;
    for (size_t j = 0; j < net.num_parties(); j++) {
        ColorConstraint cc{Ambiguous{}, {}};
        if (strat) {
            cc.revealed = revealed_tuples(strat->parties[j]);
        }
        c.push_back(cc);
    }
    return c;
}

TEST(Classical, DecoheredFiveZeroTokenMarginal) {
    auto inst = catalog("5-0");
    auto token = coarse_grain(classical_joint(inst.net, decohere(inst.net, inst.strat)));
    EXPECT_NEAR(token.probability({TokenCount{1, {}}, TokenCount{1, {}}, TokenCount{2, {}}, TokenCount{1, {}}}), 3.0 / 32,
                1e-12);
}

TEST(Classical, DecoheredRingMatchesBruteForce) {
    auto inst = catalog("ring:3");
    auto token = coarse_grain(classical_joint(inst.net, decohere(inst.net, inst.strat)));
    // Brute force: S_i's token goes to A_i (bit 0) or A_{i+1} (bit 1).
    int hits = 0;
    for (int code = 0; code < 8; code++) {
        int count[3] = {0, 0, 0};
        for (int i = 0; i < 3; i++) {
            count[((code >> i) & 1) ? (i + 1) % 3 : i]++;
        }
        hits += count[0] == 1 && count[1] == 1 && count[2] == 1;
    }
    EXPECT_NEAR(token.probability({TokenCount{1, {}}, TokenCount{1, {}}, TokenCount{1, {}}}), hits / 8.0, 1e-12);
}

TEST(Classical, DeterministicSingleSource) {
    Network net = Network::create({"A", "B"}, {{"S", {"A", "B"}}});
    ClassicalStrategy s;
    s.sources.push_back({"S", {{0, 0}}, {1.0}});
    s.parties.push_back({"A", {ColorMatch{0}}, {{{0}, {{0, 1.0}}}}});
    s.parties.push_back({"B", {ColorMatch{0}}, {{{0}, {{0, 1.0}}}}});
    auto d = classical_joint(net, s);
    ASSERT_EQ(d.atoms.size(), 1u);
    EXPECT_NEAR(d.atoms.begin()->second, 1.0, 1e-15);
}

TEST(Classical, ValidationErrors) {
    Network net = Network::create({"A", "B"}, {{"S", {"A", "B"}}});
    ClassicalStrategy s;
    s.sources.push_back({"S", {{0, 0}, {1, 1}}, {0.5, 0.6}});
    s.parties.push_back({"A", {ColorMatch{0}, ColorMatch{1}}, {{{0}, {{0, 1.0}}}, {{1}, {{1, 1.0}}}}});
    s.parties.push_back({"B", {ColorMatch{0}, ColorMatch{1}}, {{{0}, {{0, 1.0}}}, {{1}, {{1, 1.0}}}}});
    EXPECT_THROW(validate_classical(net, s), Error);
    s.sources[0].probs = {0.5, 0.5};
    EXPECT_NO_THROW(validate_classical(net, s));
    s.parties[1].response.erase({1});
    EXPECT_THROW(classical_joint(net, s), Error);  // no response for an input that occurs
}

TEST(Classical, FiveZeroTokenPatterns) {
    auto net = catalog("5-0").net;
    std::vector<int> eta(5, 1);
    EXPECT_EQ(enumerate_token_patterns(net, eta, {1, 1, 2, 1}).size(), 3u);
    EXPECT_EQ(enumerate_token_patterns(net, eta, {1, 1, 3, 0}).size(), 1u);
    EXPECT_TRUE(enumerate_token_patterns(net, eta, {1, 1, 1, 1}).empty());  // 4 != 5 tokens
}

TEST(Classical, RingHasTwoRoutings) {
    for (int n = 3; n <= 8; n++) {
        Network ring = build_ring(n);
        std::vector<int> ones(static_cast<size_t>(n), 1);
        auto p = enumerate_token_patterns(ring, ones, ones);
        ASSERT_EQ(p.size(), 2u);
        EXPECT_EQ(p[0].index, 1);
        EXPECT_EQ(p[1].index, 2);
    }
}

// All compositions of eta_i over the source's parties, filtered by target.
size_t brute_force_routings(const Network &net, const std::vector<int> &eta, const std::vector<int> &target) {
    size_t count = 0;
    std::vector<int> load(net.num_parties(), 0);
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == net.num_sources()) {
            count += load == target;
            return;
        }
        auto parties = net.source_parties(i);
        std::function<void(size_t, int)> place = [&](size_t m, int left) {
            if (m + 1 == parties.size()) {
                load[parties[m]] += left;
                rec(i + 1);
                load[parties[m]] -= left;
                return;
            }
            for (int x = 0; x <= left; x++) {
                load[parties[m]] += x;
                place(m + 1, left - x);
                load[parties[m]] -= x;
            }
        };
        place(0, eta[i]);
    };
    rec(0);
    return count;
}

TEST(ClassicalProperty, TokenPatternsMatchBruteForce) {
    struct Case {
        Network net;
        std::vector<int> eta;
    };
    std::vector<Case> cases = {{catalog("5-0").net, {1, 1, 1, 1, 1}},
                               {build_ring(4), {1, 2, 0, 1}},
                               {build_complete(4), {1, 1, 2, 1, 0, 1}},
                               {catalog("1-2").net, {2, 1, 1}}};
    for (const auto &c : cases) {
        int total = 0;
        for (int e : c.eta) {
            total += e;
        }
        // Every target vector with the right sum and entries up to `total`.
        std::vector<int> target(c.net.num_parties(), 0);
        std::function<void(size_t, int)> rec = [&](size_t j, int left) {
            if (j + 1 == target.size()) {
                target[j] = left;
                auto got = enumerate_token_patterns(c.net, c.eta, target);
                EXPECT_EQ(got.size(), brute_force_routings(c.net, c.eta, target));
                for (const auto &p : got) {
                    for (size_t jj = 0; jj < target.size(); jj++) {
                        int n = 0;
                        for (int x : p.delivered(c.net, jj)) {
                            n += x;
                        }
                        EXPECT_EQ(n, target[jj]);
                    }
                }
                return;
            }
            for (int x = 0; x <= left; x++) {
                target[j] = x;
                rec(j + 1, left - x);
            }
        };
        rec(0, total);
    }
}

TEST(Classical, OneTwoColorPatterns) {
    auto inst = catalog("1-2");
    auto p = enumerate_color_patterns(inst.net, 3, all_ambiguous(inst.net, &inst.strat));
    EXPECT_EQ(p.size(), 3u);
    // Without the revealed tuples the three t=4,5,6 colorings come back.
    EXPECT_EQ(enumerate_color_patterns(inst.net, 3, all_ambiguous(inst.net, nullptr)).size(), 6u);
}

TEST(Classical, CompleteNetworkColorPatterns) {
    auto inst = catalog("kn:4");
    EXPECT_EQ(enumerate_color_patterns(inst.net, 2, all_ambiguous(inst.net, &inst.strat)).size(), 2u);
}

TEST(Classical, EdgeNetworkColorPatterns) {
    Network edge = build_edge_network(5);
    EXPECT_EQ(enumerate_color_patterns(edge, 5, all_ambiguous(edge, nullptr)).size(), 120u);
    auto inst = catalog("coloring:5");
    std::vector<std::optional<ColorConstraint>> c;
    for (size_t j = 0; j < inst.net.num_parties(); j++) {
        c.push_back(ColorConstraint{Ambiguous{}, rigid_revealed_tuples(inst.net, inst.strat, j)});
    }
    EXPECT_EQ(enumerate_color_patterns(inst.net, 5, c).size(), 2u);
}

TEST(ClassicalProperty, ColorConstraintsOnlyShrink) {
    auto inst = catalog("1-2");
    std::vector<std::optional<ColorConstraint>> none(inst.net.num_parties());
    auto all = enumerate_color_patterns(inst.net, 3, none);
    EXPECT_EQ(all.size(), 27u);  // 3^3 sources
    auto c = none;
    c[0] = ColorConstraint{ColorMatch{1}, {}};
    auto fewer = enumerate_color_patterns(inst.net, 3, c);
    EXPECT_LT(fewer.size(), all.size());
    c[3] = ColorConstraint{Ambiguous{}, {}};
    EXPECT_LE(enumerate_color_patterns(inst.net, 3, c).size(), fewer.size());
    for (const auto &p : fewer) {
        for (int x : p.delivered(inst.net, 0)) {
            EXPECT_EQ(x, 1);
        }
    }
    c[2] = ColorConstraint{RevealedTuple{{0, 1}}, {}};
    for (const auto &p : enumerate_color_patterns(inst.net, 3, c)) {
        EXPECT_EQ(p.delivered(inst.net, 2), (SymbolTuple{0, 1}));
    }
}

TEST(Classical, TokenCountConstraintRejected) {
    auto inst = catalog("1-2");
    std::vector<std::optional<ColorConstraint>> c(inst.net.num_parties());
    c[0] = ColorConstraint{TokenCount{1, {}}, {}};
    EXPECT_THROW(enumerate_color_patterns(inst.net, 3, c), Error);
}

TEST(ClassicalProperty, JointHasUnitMass) {
    for (const char *name : {"5-0", "1-2", "ring:4", "kn:4"}) {
        auto inst = catalog(name);
        EXPECT_NEAR(classical_joint(inst.net, decohere(inst.net, inst.strat)).total_mass(), 1.0, 1e-12) << name;
    }
}

}  // namespace
}  // namespace netrigid
