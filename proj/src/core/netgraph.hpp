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

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netrigid {

struct SourceSpec {
    std::string id;
    std::vector<std::string> parties;  // ordered; fixes the source's tuple layout
};

/// Bipartite source/party graph with explicit per-party subsystem ordering.
///
/// Immutable after construction. Parties and sources are addressed by dense
/// indices in declaration order; identifiers are kept for serialization.
class Network {
   public:
    enum class RedundancyPolicy {
        reject,  // a source whose parties are a subset of another source's is an error
        allow,   // keep it (counterexample networks); see redundant_pairs()
    };

    /// `party_order` maps a party to its incident sources in subsystem order. Parties
    /// missing from it take their sources in declaration order.
    static Network create(std::vector<std::string> parties, std::vector<SourceSpec> sources,
                          const std::map<std::string, std::vector<std::string>> &party_order = {},
                          RedundancyPolicy policy = RedundancyPolicy::reject);

    size_t num_parties() const {
        return party_ids_.size();
    }
    size_t num_sources() const {
        return source_ids_.size();
    }
    const std::string &party_id(size_t j) const {
        return party_ids_[j];
    }
    const std::string &source_id(size_t i) const {
        return source_ids_[i];
    }
    std::optional<size_t> find_party(const std::string &id) const;
    std::optional<size_t> find_source(const std::string &id) const;

    /// Parties of source i, in the source's order.
    std::span<const size_t> source_parties(size_t i) const {
        return source_parties_[i];
    }
    /// Sources of party j, in the party's subsystem order.
    std::span<const size_t> party_sources(size_t j) const {
        return party_sources_[j];
    }
    /// Position of party j inside source i's tuple, or npos when not connected.
    size_t slot_in_source(size_t i, size_t j) const;
    /// Position of source i inside party j's tuple, or npos when not connected.
    size_t slot_in_party(size_t j, size_t i) const;
    bool connected(size_t i, size_t j) const {
        return slot_in_source(i, j) != npos;
    }

    /// Sources common to parties j and k, ascending.
    std::vector<size_t> common_sources(size_t j, size_t k) const;

    /// Pairs (i, i') with i != i' where source i's party set contains source i''s.
    std::vector<std::pair<size_t, size_t>> redundant_pairs() const;

    static constexpr size_t npos = static_cast<size_t>(-1);

   private:
    Network() = default;

    std::vector<std::string> party_ids_;
    std::vector<std::string> source_ids_;
    std::vector<std::vector<size_t>> source_parties_;
    std::vector<std::vector<size_t>> party_sources_;
};

/// Party weights x_j in (0, 1) with unit sum over every source's neighbourhood.
struct PfisWeights {
    std::vector<double> weights;  // indexed by party
};

inline constexpr double kPfisStrictness = 1e-9;
inline constexpr double kPfisSumTolerance = 1e-9;

/// No pair of distinct parties shares two or more sources.
bool check_ndcs(const Network &net);

/// Every source is the only common source of some pair of its parties.
bool check_ecs(const Network &net);

/// Solves max s subject to B x = 1, s <= x_j <= 1 - s and accepts iff s > 1e-9.
std::optional<PfisWeights> find_pfis(const Network &net);

/// True when `w` satisfies B x = 1 within 1e-9 and every weight lies strictly inside (0, 1).
bool is_valid_pfis(const Network &net, const PfisWeights &w);

/// Ring R_n: S_i -> (A_i, A_{i+1}); A_j orders its qubits (S_{j-1}, S_j).
Network build_ring(int n);

/// Complete network K_n: one source per party pair, parties order their sources clockwise
/// starting from the neighbour A_{j+1}.
Network build_complete(int n);

/// Complete-graph edge network: sources are graph vertices, party A_{i-j} per vertex pair.
Network build_edge_network(int n);

/// Identifier of the complete-network source joining A_j and A_k ("S1-2").
std::string complete_source_id(int j, int k);

/// Identifier of the edge-network party joining S_i and S_j ("A1-2").
std::string edge_party_id(int i, int j);

}  // namespace netrigid
