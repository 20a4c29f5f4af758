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

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "core/labels.hpp"
#include "core/netgraph.hpp"

namespace netrigid {

using Amplitude = std::complex<double>;
using AmplitudeMap = std::vector<std::pair<SymbolTuple, Amplitude>>;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kOrthoTolerance = 1e-10;
inline constexpr double kAtomCutoff = 1e-14;
inline constexpr uint64_t kDefaultConfigCap = uint64_t{1} << 24;

enum class StrategyKind {
    token_counting,
    color_matching,
    generic,
};

struct SourceState {
    std::string source;
    /// Alphabet size of the wire to each connected party, in the source's party order.
    std::vector<int> dims;
    /// Tokens emitted per shot (token-counting sources only).
    std::optional<int> tokens;
    AmplitudeMap amplitudes;
};

struct BasisVector {
    OutcomeLabel label;
    AmplitudeMap amplitudes;  // over tuples in the party's source order
};

struct MeasurementBasis {
    std::string party;
    std::vector<BasisVector> vectors;
};

struct QuantumStrategy {
    StrategyKind kind = StrategyKind::generic;
    /// Catalog family name ("5-0", "ring", "1-2", "kn", "coloring"); empty for user strategies.
    std::string family;
    std::vector<SourceState> sources;     // aligned with the network's source indices
    std::vector<MeasurementBasis> parties;  // aligned with the network's party indices
};

struct Violation {
    std::string kind;   // structure, normalization, token-sum, color-sum, orthonormality, completeness, label
    std::string where;  // offending source/party and vector or tuple
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const {
        return violations.empty();
    }
};

/// Never corrects anything; every problem found is listed.
ValidationReport validate_strategy(const Network &net, const QuantumStrategy &strat);

/// Throws Error(invalid_input) carrying the first violations when validation fails.
void require_valid(const Network &net, const QuantumStrategy &strat);

/// Output distribution over label tuples. Atoms are keyed by per-party indices into
/// `alphabets`, in party order.
struct JointDistribution {
    std::vector<std::vector<OutcomeLabel>> alphabets;
    std::map<std::vector<int>, double> atoms;

    double total_mass() const;
    double probability(const std::vector<OutcomeLabel> &labels) const;
    std::vector<OutcomeLabel> labels_of(const std::vector<int> &key) const;
    /// Atoms keyed by labels, for comparing distributions with different alphabets.
    std::map<std::vector<OutcomeLabel>, double> labeled() const;
};

/// Product of wire alphabet sizes over the party's sources.
size_t party_dimension(const Network &net, const QuantumStrategy &strat, size_t party);

/// Symbol delivered by source `i` to party `j` when the source emits `tuple`.
int symbol_for_party(const Network &net, size_t i, size_t j, const SymbolTuple &tuple);

/// Exact Born-rule distribution, contracting over the product of source supports.
JointDistribution joint_distribution(const Network &net, const QuantumStrategy &strat,
                                     uint64_t config_cap = kDefaultConfigCap);

using LabelProjection = std::function<OutcomeLabel(size_t party, const OutcomeLabel &)>;

/// Pushforward; output alphabets are the sorted distinct images.
JointDistribution coarse_grain(const JointDistribution &dist, const LabelProjection &projection);

/// The token/color coarse-graining (drops refinement indices).
JointDistribution coarse_grain(const JointDistribution &dist);

struct ClassicalStrategy;

/// Dephases every source in the computational basis: source pmfs are |amplitude|^2 and the
/// response to input tuple s is |<v_a|s>|^2.
ClassicalStrategy decohere(const Network &net, const QuantumStrategy &strat);

/// Overlap <v|s> of a basis vector with a computational tuple.
Amplitude overlap(const BasisVector &v, const SymbolTuple &tuple);

/// |psi(tuple)|^2 for a source state.
double source_weight(const SourceState &s, const SymbolTuple &tuple);

}  // namespace netrigid
