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

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/classical.hpp"
#include "core/lpcore.hpp"
#include "core/netgraph.hpp"
#include "core/quantum.hpp"

namespace netrigid {

/// Conditioning event on the parties' outputs. By default every party must return an
/// ambiguous (provenance-hiding) outcome; optionally each party's coarse label is fixed too.
struct Event {
    std::optional<std::vector<OutcomeLabel>> coarse;

    static Event all_ambiguous() {
        return {};
    }
    bool accepts(size_t party, const OutcomeLabel &label) const;
    std::string describe() const;
};

struct QSystemOptions {
    /// Adds q(a_{-j}, t) = p_dec(t) prod_{k != j} |<a_k|s_t^k>|^2 / Pr rows for every j.
    bool product_marginals = false;
    uint64_t config_cap = kDefaultConfigCap;
    size_t max_variables = 50000;
};

struct MarginalTarget {
    size_t party;
    size_t label;    // index into QSystemSpec::alphabets[party]
    size_t pattern;  // index into QSystemSpec::patterns
    double value;
};

struct QSystemSpec {
    Event event;
    std::vector<std::string> parties;
    /// Per party: basis-vector indices kept in the event alphabet, and their labels.
    std::vector<std::vector<size_t>> basis_index;
    std::vector<std::vector<OutcomeLabel>> alphabets;
    std::vector<HiddenPattern> patterns;
    std::vector<double> pattern_probabilities;  // p_dec(t)
    double event_probability = 0;
    /// q(o) for every tuple of the product of alphabets (keys index into alphabets).
    std::map<std::vector<int>, double> joint_targets;
    std::vector<MarginalTarget> marginals;
    /// Rows q(o_{-j}, t) keyed by (omitted party, pattern, outputs of the other parties).
    struct ProductTarget {
        size_t omitted;
        size_t pattern;
        std::vector<int> others;  // outputs of all parties except `omitted`, in party order
        double value;
    };
    std::vector<ProductTarget> product_targets;
    /// Revealed tuples used for pattern pruning, per party.
    std::vector<std::set<SymbolTuple>> rigid_revealed;
    size_t dropped_labels = 0;
    /// "published family <name>" or "heuristic, unproven".
    std::string provenance;
};

/// Builds the constraint data on q(outputs, t). Throws Error(invalid_input) for a
/// zero-probability event, an empty pattern set, or pattern weights that do not
/// account for the event probability.
QSystemSpec build_q_system(const Network &net, const QuantumStrategy &strat, const Event &event,
                           const QSystemOptions &options = {});

FeasibilityProblem to_feasibility_problem(const QSystemSpec &spec);

/// Revealed tuples of party j that the refined-measurement rigidity results cover.
std::set<SymbolTuple> rigid_revealed_tuples(const Network &net, const QuantumStrategy &strat, size_t j);

struct FinnerResult {
    double lhs = 0;
    double rhs = 0;
    double gap = 0;  // rhs - lhs
};

using Indicator = std::function<bool(size_t party, const OutcomeLabel &)>;

/// lhs = E[prod g_j], rhs = prod E[g_j]^{x_j} for 0/1 output indicators g_j.
FinnerResult finner_check(const Network &net, const JointDistribution &dist, const PfisWeights &weights,
                          const Indicator &indicator);
FinnerResult finner_check(const Network &net, const ClassicalStrategy &strat, const PfisWeights &weights,
                          const Indicator &indicator);

enum class Verdict {
    nonlocal,
    inconclusive,
    refused,
    indeterminate,
};

std::string to_string(Verdict v);

struct HypothesisCheck {
    bool ndcs = false;
    bool ecs = false;
    std::optional<PfisWeights> pfis;
    StrategyKind kind = StrategyKind::generic;
    bool satisfied = false;
    std::string statement;  // which rigidity statement was verified, or why none applies
};

HypothesisCheck check_hypotheses(const Network &net, const QuantumStrategy &strat);

struct CertificationReport {
    Verdict verdict = Verdict::refused;
    HypothesisCheck hypotheses;
    std::string message;
    std::optional<QSystemSpec> system;
    std::optional<FeasibilityProblem> problem;
    std::optional<FeasibilityResult> result;
    bool verified = false;
    SolveStats stats;
};

/// Runs hypotheses -> q-system -> LP. Infeasible gives NONLOCAL, feasible gives INCONCLUSIVE.
CertificationReport certify_nonlocality(const Network &net, const QuantumStrategy &strat,
                                        const Event &event = Event::all_ambiguous(),
                                        const QSystemOptions &options = {});

}  // namespace netrigid
