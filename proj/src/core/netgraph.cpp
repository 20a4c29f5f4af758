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

#include "core/netgraph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "core/errors.hpp"
#include "core/lpcore.hpp"

namespace netrigid {

Network Network::create(std::vector<std::string> parties, std::vector<SourceSpec> sources,
                        const std::map<std::string, std::vector<std::string>> &party_order,
                        RedundancyPolicy policy) {
    if (parties.empty()) {
        fail_input("network has no parties");
    }
    if (sources.empty()) {
        fail_input("network has no sources");
    }
    Network net;
    std::map<std::string, size_t> party_index;
    for (size_t j = 0; j < parties.size(); j++) {
        if (parties[j].empty()) {
            fail_input("empty party identifier");
        }
        if (!party_index.emplace(parties[j], j).second) {
            fail_input("duplicate party identifier '" + parties[j] + "'");
        }
    }
    std::map<std::string, size_t> source_index;
    net.party_sources_.resize(parties.size());
    for (size_t i = 0; i < sources.size(); i++) {
        const auto &src = sources[i];
        if (src.id.empty()) {
            fail_input("empty source identifier");
        }
        if (party_index.count(src.id)) {
            fail_input("identifier '" + src.id + "' names both a party and a source");
        }
        if (!source_index.emplace(src.id, i).second) {
            fail_input("duplicate source identifier '" + src.id + "'");
        }
        if (src.parties.empty()) {
            fail_input("source '" + src.id + "' connects to no party");
        }
        std::vector<size_t> row;
        for (const auto &p : src.parties) {
            auto it = party_index.find(p);
            if (it == party_index.end()) {
                fail_input("source '" + src.id + "' references unknown party '" + p + "'");
            }
            if (std::find(row.begin(), row.end(), it->second) != row.end()) {
                fail_input("source '" + src.id + "' lists party '" + p + "' twice");
            }
            row.push_back(it->second);
            net.party_sources_[it->second].push_back(i);
        }
        net.source_parties_.push_back(std::move(row));
    }
    for (size_t j = 0; j < parties.size(); j++) {
        if (net.party_sources_[j].empty()) {
            fail_input("party '" + parties[j] + "' receives no source");
        }
    }
    for (const auto &[party, order] : party_order) {
        auto it = party_index.find(party);
        if (it == party_index.end()) {
            fail_input("party_order references unknown party '" + party + "'");
        }
        auto &incident = net.party_sources_[it->second];
        std::vector<size_t> reordered;
        for (const auto &s : order) {
            auto sit = source_index.find(s);
            if (sit == source_index.end()) {
                fail_input("party_order of '" + party + "' references unknown source '" + s + "'");
            }
            reordered.push_back(sit->second);
        }
        std::vector<size_t> a = incident, b = reordered;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
            fail_input("party_order of '" + party + "' is not a permutation of its incident sources");
        }
        incident = std::move(reordered);
    }
    net.party_ids_ = std::move(parties);
    for (auto &s : sources) {
        net.source_ids_.push_back(std::move(s.id));
    }
    if (policy == RedundancyPolicy::reject) {
        auto red = net.redundant_pairs();
        if (!red.empty()) {
            fail_input("source '" + net.source_ids_[red[0].second] + "' is redundant: its parties are covered by '" +
                       net.source_ids_[red[0].first] + "'");
        }
    }
    return net;
}

std::optional<size_t> Network::find_party(const std::string &id) const {
    auto it = std::find(party_ids_.begin(), party_ids_.end(), id);
    if (it == party_ids_.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - party_ids_.begin());
}

std::optional<size_t> Network::find_source(const std::string &id) const {
    auto it = std::find(source_ids_.begin(), source_ids_.end(), id);
    if (it == source_ids_.end()) {
        return std::nullopt;
    }
    return static_cast<size_t>(it - source_ids_.begin());
}

size_t Network::slot_in_source(size_t i, size_t j) const {
    const auto &row = source_parties_[i];
    auto it = std::find(row.begin(), row.end(), j);
    return it == row.end() ? npos : static_cast<size_t>(it - row.begin());
}

size_t Network::slot_in_party(size_t j, size_t i) const {
    const auto &row = party_sources_[j];
    auto it = std::find(row.begin(), row.end(), i);
    return it == row.end() ? npos : static_cast<size_t>(it - row.begin());
}

std::vector<size_t> Network::common_sources(size_t j, size_t k) const {
    std::vector<size_t> out;
    for (size_t i : party_sources_[j]) {
        if (connected(i, k)) {
            out.push_back(i);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<size_t, size_t>> Network::redundant_pairs() const {
    std::vector<std::pair<size_t, size_t>> out;
    for (size_t i = 0; i < num_sources(); i++) {
        for (size_t k = 0; k < num_sources(); k++) {
            if (i == k) {
                continue;
            }
            bool covered = std::all_of(source_parties_[k].begin(), source_parties_[k].end(),
                                       [&](size_t j) { return connected(i, j); });
            // Identical party sets are reported once.
            if (covered && (source_parties_[i].size() > source_parties_[k].size() || i < k)) {
                out.emplace_back(i, k);
            }
        }
    }
    return out;
}

bool check_ndcs(const Network &net) {
    for (size_t j = 0; j < net.num_parties(); j++) {
        for (size_t k = j + 1; k < net.num_parties(); k++) {
            if (net.common_sources(j, k).size() >= 2) {
                return false;
            }
        }
    }
    return true;
}

bool check_ecs(const Network &net) {
    for (size_t i = 0; i < net.num_sources(); i++) {
        auto parties = net.source_parties(i);
        bool found = false;
        for (size_t a = 0; a < parties.size() && !found; a++) {
            for (size_t b = a + 1; b < parties.size() && !found; b++) {
                found = net.common_sources(parties[a], parties[b]).size() == 1;
            }
        }
        if (!found) {
            return false;
        }
    }
    return true;
}

bool is_valid_pfis(const Network &net, const PfisWeights &w) {
    if (w.weights.size() != net.num_parties()) {
        return false;
    }
    for (double x : w.weights) {
        if (!(x > kPfisStrictness && x < 1 - kPfisStrictness)) {
            return false;
        }
    }
    for (size_t i = 0; i < net.num_sources(); i++) {
        double sum = 0;
        for (size_t j : net.source_parties(i)) {
            sum += w.weights[j];
        }
        if (std::abs(sum - 1) > kPfisSumTolerance) {
            return false;
        }
    }
    return true;
}

std::optional<PfisWeights> find_pfis(const Network &net) {
    // Variables: x_j, s, lo_j, hi_j (all >= 0) with x_j - s - lo_j = 0, x_j + s + hi_j = 1.
    size_t J = net.num_parties();
    size_t nv = 3 * J + 1;
    size_t s_var = J;
    std::vector<std::vector<double>> a;
    std::vector<double> b;
    for (size_t i = 0; i < net.num_sources(); i++) {
        std::vector<double> row(nv, 0.0);
        for (size_t j : net.source_parties(i)) {
            row[j] = 1;
        }
        a.push_back(std::move(row));
        b.push_back(1);
    }
    for (size_t j = 0; j < J; j++) {
        std::vector<double> lo(nv, 0.0), hi(nv, 0.0);
        lo[j] = 1;
        lo[s_var] = -1;
        lo[J + 1 + j] = -1;
        hi[j] = 1;
        hi[s_var] = 1;
        hi[2 * J + 1 + j] = 1;
        a.push_back(std::move(lo));
        b.push_back(0);
        a.push_back(std::move(hi));
        b.push_back(1);
    }
    std::vector<double> c(nv, 0.0);
    c[s_var] = 1;
    auto sol = detail::maximize(a, b, c);
    if (!sol || (*sol)[s_var] <= kPfisStrictness) {
        return std::nullopt;
    }
    PfisWeights w;
    w.weights.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(J));
    if (!is_valid_pfis(net, w)) {
        return std::nullopt;
    }
    return w;
}

namespace {
void require_size(int n, int lo, const char *what) {
    if (n < lo) {
        fail_input(std::string(what) + " needs n >= " + std::to_string(lo) + ", got " + std::to_string(n));
    }
}
}  // namespace

Network build_ring(int n) {
    require_size(n, 3, "ring");
    std::vector<std::string> parties;
    std::vector<SourceSpec> sources;
    std::map<std::string, std::vector<std::string>> order;
    auto A = [](int j) { return "A" + std::to_string(j); };
    auto S = [](int i) { return "S" + std::to_string(i); };
    for (int j = 1; j <= n; j++) {
        parties.push_back(A(j));
    }
    for (int i = 1; i <= n; i++) {
        sources.push_back({S(i), {A(i), A(i % n + 1)}});
    }
    for (int j = 1; j <= n; j++) {
        order[A(j)] = {S(j == 1 ? n : j - 1), S(j)};
    }
    return Network::create(std::move(parties), std::move(sources), order);
}

std::string complete_source_id(int j, int k) {
    if (j > k) {
        std::swap(j, k);
    }
    return "S" + std::to_string(j) + "-" + std::to_string(k);
}

Network build_complete(int n) {
    require_size(n, 3, "complete network");
    std::vector<std::string> parties;
    std::vector<SourceSpec> sources;
    std::map<std::string, std::vector<std::string>> order;
    auto A = [](int j) { return "A" + std::to_string(j); };
    for (int j = 1; j <= n; j++) {
        parties.push_back(A(j));
    }
    for (int j = 1; j <= n; j++) {
        for (int k = j + 1; k <= n; k++) {
            sources.push_back({complete_source_id(j, k), {A(j), A(k)}});
        }
    }
    for (int j = 1; j <= n; j++) {
        auto &o = order[A(j)];
        for (int step = 1; step < n; step++) {
            o.push_back(complete_source_id(j, (j - 1 + step) % n + 1));
        }
    }
    return Network::create(std::move(parties), std::move(sources), order);
}

std::string edge_party_id(int i, int j) {
    if (i > j) {
        std::swap(i, j);
    }
    return "A" + std::to_string(i) + "-" + std::to_string(j);
}

Network build_edge_network(int n) {
    require_size(n, 3, "edge network");
    std::vector<std::string> parties;
    std::vector<SourceSpec> sources;
    std::map<std::string, std::vector<std::string>> order;
    for (int i = 1; i <= n; i++) {
        for (int j = i + 1; j <= n; j++) {
            parties.push_back(edge_party_id(i, j));
            order[edge_party_id(i, j)] = {"S" + std::to_string(i), "S" + std::to_string(j)};
        }
    }
    for (int i = 1; i <= n; i++) {
        SourceSpec s{"S" + std::to_string(i), {}};
        for (int j = 1; j <= n; j++) {
            if (j != i) {
                s.parties.push_back(edge_party_id(i, j));
            }
        }
        sources.push_back(std::move(s));
    }
    return Network::create(std::move(parties), std::move(sources), order);
}

}  // namespace netrigid
