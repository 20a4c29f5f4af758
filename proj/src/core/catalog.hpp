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

#include <optional>
#include <string>
#include <vector>

#include "core/netgraph.hpp"
#include "core/quantum.hpp"

namespace netrigid {

/// Coefficient matrix: row r is measurement vector r, column t the pattern it weighs.
using CMatrix = std::vector<std::vector<Amplitude>>;

struct CatalogInstance {
    Network net;
    QuantumStrategy strat;
};

struct RotationParams {
    double theta = 0;

    /// Rotation about the x axis: [[1,0,0],[0,c,-s],[0,s,c]].
    CMatrix r3() const;
    /// [[c,-s],[s,c]].
    CMatrix r2() const;
};

/// Throws Error(invalid_input) unless `m` is square of size `dim` and unitary within 1e-12.
void require_unitary(const CMatrix &m, size_t dim, const std::string &what);

/// [[l, m], [m, -l]] with m = sqrt(1 - l^2): the two-pattern block used by rings,
/// complete networks and the coloring family.
CMatrix reflection_block(double lambda);

/// Four-party network with five bipartite sources (K_4 minus one edge).
CatalogInstance make_5_0_tc(const CMatrix &wa, const CMatrix &wb, const CMatrix &wc, const CMatrix &wd);
/// A and C use R3_x(theta), B and D use R2(theta).
CatalogInstance make_5_0_tc(const RotationParams &rot);

CatalogInstance make_ring_tc(int n, const std::vector<CMatrix> &omega);

/// Even n only: the ring strategy after X on both qubits of every even party, read as
/// two-color matching.
CatalogInstance make_ring_cm(int n, const std::vector<CMatrix> &omega);

/// Label of the color-matching ring strategy corresponding to a token-counting ring label.
OutcomeLabel ring_cm_label(size_t party, const OutcomeLabel &tc_label);

CatalogInstance make_1_2_cm(const std::vector<CMatrix> &omega);

/// n >= 4. Two colors; each party's two-dimensional ambiguous block is spanned by the
/// boundary-colored tuples |01...10> (pattern 1) and |10...01> (pattern 2).
CatalogInstance make_complete_cm(int n, const std::vector<CMatrix> &omega);

/// n >= 5. One 2x2 block per party (parties in lexicographic order A1-2, A1-3, ...) acting
/// on the two pattern tuples; remaining ambiguous tuples are measured individually.
CatalogInstance make_graph_coloring_cm(int n, const std::vector<CMatrix> &omega);

/// Parameters addressable from the command line.
struct CatalogParams {
    double theta = 0.39269908169872414;  // pi/8
    std::optional<double> lambda;       // overrides sin(theta) for the two-pattern families
    bool asymmetric = false;            // last party uses lambda = 1/sqrt(2)
};

/// Names: "5-0", "ring:n", "ring-cm:n", "1-2", "kn:n", "coloring:n".
CatalogInstance make_catalog(const std::string &name, const CatalogParams &params);

std::vector<std::string> catalog_names();

}  // namespace netrigid
