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

// Internal: contraction over source supports shared by the quantum and classical simulators.

#include <cstdint>
#include <map>
#include <vector>

#include "core/errors.hpp"
#include "core/labels.hpp"
#include "core/netgraph.hpp"

namespace netrigid {

namespace detail_sim {

/// Enumerates the product of per-source supports and, per configuration, expands the
/// product of per-party response lists. Shared by the quantum (amplitude) and classical
/// (probability) contractions.
template <class Weight, class Coef, class Sink>
void contract(const Network &net, const std::vector<std::vector<std::pair<SymbolTuple, Weight>>> &supports,
              const std::vector<std::map<SymbolTuple, std::vector<std::pair<int, Coef>>>> &responses,
              const std::vector<uint64_t> &radix, uint64_t config_cap, bool strict, Sink &&sink) {
    size_t I = net.num_sources(), J = net.num_parties();
    uint64_t configs = 1;
    for (const auto &s : supports) {
        if (s.empty()) {
            return;
        }
        if (configs > config_cap / s.size()) {
            fail_capacity("source support product exceeds the configuration cap of " + std::to_string(config_cap));
        }
        configs *= s.size();
    }
    std::vector<std::vector<std::pair<size_t, size_t>>> wires(J);  // (source, slot) per party slot
    for (size_t j = 0; j < J; j++) {
        for (size_t i : net.party_sources(j)) {
            wires[j].emplace_back(i, net.slot_in_source(i, j));
        }
    }
    std::vector<size_t> idx(I, 0);
    std::vector<const std::vector<std::pair<int, Coef>>*> lists(J);
    SymbolTuple received;
    while (true) {
        Weight w = 1;
        for (size_t i = 0; i < I; i++) {
            w *= supports[i][idx[i]].second;
        }
        bool live = true;
        for (size_t j = 0; j < J && live; j++) {
            received.clear();
            for (auto [i, slot] : wires[j]) {
                received.push_back(supports[i][idx[i]].first[slot]);
            }
            auto it = responses[j].find(received);
            if (it == responses[j].end() || it->second.empty()) {
                if (strict) {
                    fail_input("party '" + net.party_id(j) + "' has no response to a reachable input tuple");
                }
                live = false;
            } else {
                lists[j] = &it->second;
            }
        }
        if (live) {
            // Depth-first expansion over parties.
            std::vector<size_t> pos(J, 0);
            std::vector<Weight> partial(J + 1);
            std::vector<uint64_t> key(J + 1, 0);
            partial[0] = w;
            size_t depth = 0;
            while (true) {
                if (depth == J) {
                    sink(key[J], partial[J]);
                    if (J == 0) {
                        break;
                    }
                    depth--;
                    pos[depth]++;
                    continue;
                }
                if (pos[depth] >= lists[depth]->size()) {
                    if (depth == 0) {
                        break;
                    }
                    pos[depth] = 0;
                    depth--;
                    pos[depth]++;
                    continue;
                }
                const auto &[a, c] = (*lists[depth])[pos[depth]];
                partial[depth + 1] = partial[depth] * c;
                key[depth + 1] = key[depth] + static_cast<uint64_t>(a) * radix[depth];
                depth++;
            }
        }
        size_t k = I;
        bool done = true;
        while (k > 0) {
            k--;
            if (++idx[k] < supports[k].size()) {
                done = false;
                break;
            }
            idx[k] = 0;
        }
        if (done) {
            return;
        }
    }
}

inline std::vector<uint64_t> radix_for(const std::vector<size_t> &sizes) {
    std::vector<uint64_t> radix(sizes.size());
    uint64_t r = 1;
    for (size_t j = sizes.size(); j-- > 0;) {
        radix[j] = r;
        if (sizes[j] != 0 && r > UINT64_MAX / sizes[j]) {
            fail_capacity("outcome space does not fit a 64-bit index");
        }
        r *= sizes[j];
    }
    return radix;
}

inline std::vector<int> decode(uint64_t key, const std::vector<uint64_t> &radix) {
    std::vector<int> out(radix.size());
    for (size_t j = 0; j < radix.size(); j++) {
        out[j] = static_cast<int>(key / radix[j]);
        key %= radix[j];
    }
    return out;
}

}  // namespace detail_sim

}  // namespace netrigid
