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
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace netrigid {

inline constexpr double kFeasibilityTolerance = 1e-9;
inline constexpr double kNonnegTolerance = 1e-12;
inline constexpr double kCertificateSlack = 1e-12;
inline constexpr double kMinFarkasMargin = 1e-7;

struct ConstraintRow {
    std::vector<std::pair<size_t, double>> coeffs;  // sparse (variable, coefficient)
    double rhs = 0;
    std::string tag;  // names the identity that generated this row
};

/// Find q >= 0 with A q = b.
struct FeasibilityProblem {
    std::vector<std::string> variables;
    std::vector<ConstraintRow> rows;
};

struct Feasible {
    std::vector<double> witness;
};

/// Farkas multipliers y with y^T A >= 0 and y^T b = -margin < 0, scaled so max |y_i| = 1.
struct Infeasible {
    std::vector<double> certificate;
    double margin = 0;
};

using FeasibilityResult = std::variant<Feasible, Infeasible>;

struct SolveStats {
    size_t pivots = 0;
    size_t bland_pivots = 0;
};

/// Phase-1 simplex. The returned branch has already passed verify_certificate; when neither
/// branch certifies, throws Error(ErrorKind::indeterminate).
FeasibilityResult solve_feasibility(const FeasibilityProblem &p, SolveStats *stats = nullptr);

/// Re-checks a result against the problem data only.
bool verify_certificate(const FeasibilityProblem &p, const FeasibilityResult &r);

/// Throws Error(invalid_input) on non-finite coefficients, out-of-range indices, or no rows.
void validate_problem(const FeasibilityProblem &p);

namespace detail {

/// Dense max c^T x s.t. A x = b, x >= 0. Empty when infeasible or unbounded. Used for
/// small auxiliary programs (fractional independent sets), not for certification.
std::optional<std::vector<double>> maximize(const std::vector<std::vector<double>> &a,
                                            const std::vector<double> &b, const std::vector<double> &c);

}  // namespace detail

}  // namespace netrigid
