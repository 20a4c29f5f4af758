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

#include "core/lpcore.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "core/errors.hpp"

namespace netrigid {

namespace {

constexpr double kPivotTolerance = 1e-11;
constexpr double kPricingTolerance = 1e-11;
constexpr size_t kDegenerateRunBeforeBland = 50;

/// Dense simplex tableau over A x = b (b >= 0 after row flips) with one artificial per row.
/// Artificial columns are not stored: once an artificial leaves the basis it never returns.
class Tableau {
   public:
    Tableau(const std::vector<std::vector<double>> &a, const std::vector<double> &b)
        : m_(b.size()), n_(a.empty() ? 0 : a[0].size()), w_(n_ + 1), t_(m_ * w_, 0.0), basis_(m_), sign_(m_) {
        for (size_t i = 0; i < m_; i++) {
            double sign = b[i] < 0 ? -1.0 : 1.0;
            sign_[i] = sign;
            for (size_t j = 0; j < n_; j++) {
                at(i, j) = sign * a[i][j];
            }
            at(i, n_) = sign * b[i];
            basis_[i] = n_ + i;
        }
        d_.assign(n_, 0.0);
        for (size_t j = 0; j < n_; j++) {
            for (size_t i = 0; i < m_; i++) {
                d_[j] -= at(i, j);
            }
        }
    }

    double &at(size_t i, size_t j) {
        return t_[i * w_ + j];
    }
    double at(size_t i, size_t j) const {
        return t_[i * w_ + j];
    }
    size_t rows() const {
        return m_;
    }
    size_t cols() const {
        return n_;
    }
    const std::vector<size_t> &basis() const {
        return basis_;
    }
    bool is_artificial(size_t var) const {
        return var >= n_;
    }

    /// Sum of artificial values: the phase-1 objective.
    double infeasibility() const {
        double w = 0;
        for (size_t i = 0; i < m_; i++) {
            if (is_artificial(basis_[i])) {
                w += at(i, n_);
            }
        }
        return w;
    }

    /// Replaces the phase-1 reduced costs with values recomputed from duals y (original row
    /// orientation): d_j = -y^T A_j. Returns the most negative entry.
    double refresh_phase1_costs(const std::vector<std::vector<double>> &a, const Eigen::VectorXd &y) {
        double worst = 0;
        for (size_t j = 0; j < n_; j++) {
            double v = 0;
            for (size_t i = 0; i < m_; i++) {
                v -= y(static_cast<Eigen::Index>(i)) * a[i][j];
            }
            bool basic = std::find(basis_.begin(), basis_.end(), j) != basis_.end();
            d_[j] = basic ? 0.0 : v;
            worst = std::min(worst, d_[j]);
        }
        return worst;
    }

    /// Runs simplex on the current reduced-cost row (minimization). Returns false if unbounded.
    bool run(SolveStats &stats, size_t max_pivots, double pricing = kPricingTolerance) {
        size_t degenerate_run = 0;
        while (true) {
            bool bland = degenerate_run >= kDegenerateRunBeforeBland;
            size_t enter = n_;
            double best = -pricing;
            for (size_t j = 0; j < n_; j++) {
                if (d_[j] < best) {
                    enter = j;
                    if (bland) {
                        break;
                    }
                    best = d_[j];
                }
            }
            if (enter == n_) {
                return true;
            }
            size_t leave = m_;
            double ratio = std::numeric_limits<double>::infinity();
            for (size_t i = 0; i < m_; i++) {
                double v = at(i, enter);
                if (v <= kPivotTolerance) {
                    continue;
                }
                double r = at(i, n_) / v;
                if (leave == m_ || r < ratio - 1e-13 ||
                    (r <= ratio + 1e-13 && prefer_leaving(basis_[i], basis_[leave]))) {
                    if (leave == m_ || r < ratio) {
                        ratio = r;
                    }
                    leave = i;
                }
            }
            if (leave == m_) {
                return false;
            }
            if (++stats.pivots > max_pivots) {
                throw Error(ErrorKind::indeterminate, "simplex pivot limit exceeded");
            }
            if (bland) {
                stats.bland_pivots++;
            }
            degenerate_run = at(leave, n_) <= 1e-13 ? degenerate_run + 1 : 0;
            pivot(leave, enter);
        }
    }

    void pivot(size_t r, size_t c) {
        double p = at(r, c);
        double *row = &t_[r * w_];
        nz_.clear();
        for (size_t j = 0; j <= n_; j++) {
            if (row[j] != 0.0) {
                row[j] /= p;
                nz_.push_back(j);
            }
        }
        row[c] = 1.0;
        for (size_t i = 0; i < m_; i++) {
            if (i == r) {
                continue;
            }
            double *other = &t_[i * w_];
            double f = other[c];
            if (f == 0.0) {
                continue;
            }
            for (size_t j : nz_) {
                other[j] -= f * row[j];
            }
            other[c] = 0.0;
            if (other[n_] < 0 && other[n_] > -1e-13) {
                other[n_] = 0.0;
            }
        }
        double f = d_[c];
        if (f != 0.0) {
            for (size_t j : nz_) {
                if (j < n_) {
                    d_[j] -= f * row[j];
                }
            }
            d_[c] = 0.0;
        }
        basis_[r] = c;
    }

    /// Replaces the reduced-cost row for the maximization objective c (as min -c).
    void set_objective(const std::vector<double> &c, const std::vector<bool> &dead_row) {
        for (size_t j = 0; j < n_; j++) {
            double v = -c[j];
            for (size_t i = 0; i < m_; i++) {
                if (!dead_row[i] && !is_artificial(basis_[i])) {
                    v += c[basis_[i]] * at(i, j);
                }
            }
            d_[j] = v;
        }
    }

    /// Pivots remaining zero-level artificials out of the basis; rows where that is
    /// impossible are linearly dependent and are flagged dead.
    std::vector<bool> expel_artificials() {
        std::vector<bool> dead(m_, false);
        for (size_t i = 0; i < m_; i++) {
            if (!is_artificial(basis_[i])) {
                continue;
            }
            size_t best = n_;
            double mag = 1e-9;
            for (size_t j = 0; j < n_; j++) {
                if (std::abs(at(i, j)) > mag) {
                    mag = std::abs(at(i, j));
                    best = j;
                }
            }
            if (best == n_) {
                dead[i] = true;
            } else {
                pivot(i, best);
            }
        }
        return dead;
    }

    std::vector<double> primal() const {
        std::vector<double> x(n_, 0.0);
        for (size_t i = 0; i < m_; i++) {
            if (!is_artificial(basis_[i])) {
                x[basis_[i]] = at(i, n_);
            }
        }
        return x;
    }

   private:
    // Ties in the ratio test: artificials leave first, then the smallest index.
    bool prefer_leaving(size_t cand, size_t incumbent) const {
        bool ca = is_artificial(cand), ia = is_artificial(incumbent);
        if (ca != ia) {
            return ca;
        }
        return cand < incumbent;
    }

    size_t m_, n_, w_;
    std::vector<double> t_;
    std::vector<size_t> basis_;
    std::vector<double> sign_;
    std::vector<double> d_;
    std::vector<size_t> nz_;
};

std::vector<std::vector<double>> densify(const FeasibilityProblem &p) {
    std::vector<std::vector<double>> a(p.rows.size(), std::vector<double>(p.variables.size(), 0.0));
    for (size_t i = 0; i < p.rows.size(); i++) {
        for (const auto &[v, c] : p.rows[i].coeffs) {
            a[i][v] += c;
        }
    }
    return a;
}

/// Basis matrix columns in the original (unflipped) row orientation. Artificial k is
/// the unit vector scaled by the sign used when row k was flipped.
Eigen::MatrixXd basis_matrix(const std::vector<std::vector<double>> &a, const std::vector<double> &b,
                             const std::vector<size_t> &basis, size_t n) {
    size_t m = b.size();
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (size_t k = 0; k < m; k++) {
        auto col = static_cast<Eigen::Index>(k);
        if (basis[k] >= n) {
            size_t r = basis[k] - n;
            B(static_cast<Eigen::Index>(r), col) = b[r] < 0 ? -1.0 : 1.0;
        } else {
            for (size_t i = 0; i < m; i++) {
                B(static_cast<Eigen::Index>(i), col) = a[i][basis[k]];
            }
        }
    }
    return B;
}

Eigen::VectorXd refined_solve(const Eigen::PartialPivLU<Eigen::MatrixXd> &lu, const Eigen::MatrixXd &M,
                              const Eigen::VectorXd &rhs) {
    Eigen::VectorXd x = lu.solve(rhs);
    for (int step = 0; step < 2; step++) {
        x += lu.solve(rhs - M * x);
    }
    return x;
}

/// Phase-1 duals for the basis, in the original row orientation.
Eigen::VectorXd phase1_duals(const std::vector<std::vector<double>> &a, const std::vector<double> &b,
                             const std::vector<size_t> &basis, size_t n) {
    size_t m = b.size();
    Eigen::MatrixXd Bt = basis_matrix(a, b, basis, n).transpose();
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(Bt);
    Eigen::VectorXd cb = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(m));
    for (size_t k = 0; k < m; k++) {
        if (basis[k] >= n) {
            cb(static_cast<Eigen::Index>(k)) = 1.0;
        }
    }
    return refined_solve(lu, Bt, cb);
}

std::optional<Feasible> extract_witness(const FeasibilityProblem &p, const std::vector<std::vector<double>> &a,
                                        const std::vector<double> &b, const std::vector<size_t> &basis) {
    size_t n = p.variables.size();
    Eigen::MatrixXd B = basis_matrix(a, b, basis, n);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(B);
    Eigen::VectorXd rhs = Eigen::Map<const Eigen::VectorXd>(b.data(), static_cast<Eigen::Index>(b.size()));
    Eigen::VectorXd xb = refined_solve(lu, B, rhs);
    Feasible f;
    f.witness.assign(n, 0.0);
    for (size_t k = 0; k < basis.size(); k++) {
        if (basis[k] < n) {
            double v = xb(static_cast<Eigen::Index>(k));
            f.witness[basis[k]] = (v < 0 && v >= -kNonnegTolerance) ? 0.0 : v;
        }
    }
    if (!verify_certificate(p, FeasibilityResult{f})) {
        return std::nullopt;
    }
    return f;
}

std::optional<Infeasible> extract_certificate(const FeasibilityProblem &p, const std::vector<std::vector<double>> &a,
                                              const std::vector<double> &b, const std::vector<size_t> &basis) {
    size_t n = p.variables.size();
    size_t m = b.size();
    Eigen::VectorXd y = phase1_duals(a, b, basis, n);
    // Optimal phase-1 duals satisfy y^T A <= 0 and y^T b > 0, so -y is a Farkas vector.
    double scale = y.cwiseAbs().maxCoeff();
    if (!(scale > 0) || !std::isfinite(scale)) {
        return std::nullopt;
    }
    Infeasible cert;
    cert.certificate.resize(m);
    double yb = 0;
    for (size_t i = 0; i < m; i++) {
        cert.certificate[i] = -y(static_cast<Eigen::Index>(i)) / scale;
        yb += cert.certificate[i] * b[i];
    }
    cert.margin = -yb;
    if (!verify_certificate(p, FeasibilityResult{cert})) {
        return std::nullopt;
    }
    return cert;
}

}  // namespace

void validate_problem(const FeasibilityProblem &p) {
    if (p.rows.empty()) {
        fail_input("feasibility problem has no rows");
    }
    for (const auto &row : p.rows) {
        if (!std::isfinite(row.rhs)) {
            fail_input("non-finite right-hand side in row '" + row.tag + "'");
        }
        for (const auto &[v, c] : row.coeffs) {
            if (v >= p.variables.size()) {
                fail_input("row '" + row.tag + "' references variable " + std::to_string(v) + " out of range");
            }
            if (!std::isfinite(c)) {
                fail_input("non-finite coefficient in row '" + row.tag + "'");
            }
        }
    }
}

FeasibilityResult solve_feasibility(const FeasibilityProblem &p, SolveStats *stats) {
    validate_problem(p);
    SolveStats local;
    SolveStats &st = stats ? *stats : local;
    auto a = densify(p);
    std::vector<double> b;
    for (const auto &row : p.rows) {
        b.push_back(row.rhs);
    }
    double bscale = 1.0;
    for (double v : b) {
        bscale = std::max(bscale, std::abs(v));
    }
    Tableau tab(a, b);
    size_t max_pivots = 50 * (tab.rows() + tab.cols()) + 1000;
    tab.run(st, max_pivots);
    // Tableau entries drift over many pivots; re-price from exact duals until the basis is
    // optimal for the true data, so the Farkas vector survives re-verification.
    for (int round = 0; round < 8 && tab.infeasibility() > kFeasibilityTolerance * bscale; round++) {
        Eigen::VectorXd y = phase1_duals(a, b, tab.basis(), tab.cols());
        if (tab.refresh_phase1_costs(a, y) >= -1e-14) {
            break;
        }
        tab.run(st, max_pivots, 1e-14);
    }
    double w = tab.infeasibility();
    const auto &basis = tab.basis();
    if (w <= kFeasibilityTolerance * bscale) {
        if (auto f = extract_witness(p, a, b, basis)) {
            return *f;
        }
        if (auto c = extract_certificate(p, a, b, basis)) {
            return *c;
        }
    } else {
        if (auto c = extract_certificate(p, a, b, basis)) {
            return *c;
        }
        if (auto f = extract_witness(p, a, b, basis)) {
            return *f;
        }
    }
    throw Error(ErrorKind::indeterminate,
                "feasibility undecided: phase-1 residual " + std::to_string(w) + " certifies neither branch");
}

bool verify_certificate(const FeasibilityProblem &p, const FeasibilityResult &r) {
    if (const auto *f = std::get_if<Feasible>(&r)) {
        if (f->witness.size() != p.variables.size()) {
            return false;
        }
        for (double v : f->witness) {
            if (!std::isfinite(v) || v < -kNonnegTolerance) {
                return false;
            }
        }
        for (const auto &row : p.rows) {
            double s = 0;
            for (const auto &[v, c] : row.coeffs) {
                if (v >= p.variables.size()) {
                    return false;
                }
                s += c * f->witness[v];
            }
            if (!(std::abs(s - row.rhs) <= kFeasibilityTolerance)) {
                return false;
            }
        }
        return true;
    }
    const auto &inf = std::get<Infeasible>(r);
    if (inf.certificate.size() != p.rows.size()) {
        return false;
    }
    std::vector<double> ya(p.variables.size(), 0.0);
    double yb = 0;
    for (size_t i = 0; i < p.rows.size(); i++) {
        double y = inf.certificate[i];
        if (!std::isfinite(y)) {
            return false;
        }
        for (const auto &[v, c] : p.rows[i].coeffs) {
            if (v >= p.variables.size()) {
                return false;
            }
            ya[v] += y * c;
        }
        yb += y * p.rows[i].rhs;
    }
    for (double v : ya) {
        if (v < -kCertificateSlack) {
            return false;
        }
    }
    return inf.margin >= kMinFarkasMargin && yb <= -inf.margin + 1e-15 && std::abs(yb + inf.margin) <= 1e-12;
}

namespace detail {

std::optional<std::vector<double>> maximize(const std::vector<std::vector<double>> &a,
                                            const std::vector<double> &b, const std::vector<double> &c) {
    Tableau tab(a, b);
    SolveStats st;
    size_t max_pivots = 50 * (tab.rows() + tab.cols()) + 1000;
    tab.run(st, max_pivots);
    if (tab.infeasibility() > kFeasibilityTolerance) {
        return std::nullopt;
    }
    auto dead = tab.expel_artificials();
    tab.set_objective(c, dead);
    if (!tab.run(st, max_pivots)) {
        return std::nullopt;
    }
    return tab.primal();
}

}  // namespace detail

}  // namespace netrigid
