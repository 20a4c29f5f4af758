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

#include <string>
#include <vector>

#include "core/catalog.hpp"
#include "core/rigidity.hpp"

namespace netrigid {

enum class SweepParameter {
    theta,
    lambda,
};

struct SweepConfig {
    std::string catalog;
    CatalogParams base;  // the swept field is overwritten per point
    SweepParameter parameter = SweepParameter::theta;
    double from = 0;
    double to = 0;
    int steps = 1;
    bool log_scale = false;  // geometric spacing; needs 0 < from, to
    unsigned workers = 0;    // 0 picks hardware_concurrency
    QSystemOptions options;
};

struct SweepRow {
    double value = 0;  // the swept parameter
    Verdict verdict = Verdict::refused;
    double margin = 0;  // Farkas margin for NONLOCAL rows, 0 otherwise
    double event_probability = 0;
    double ms = 0;
    std::string message;
};

/// Inclusive grid of `steps` points from `from` to `to`.
std::vector<double> sweep_grid(const SweepConfig &cfg);

/// Certifies every grid point. Jobs run on a worker pool; rows come back sorted by value.
/// Input and capacity errors from any job are rethrown after all workers stop.
std::vector<SweepRow> run_sweep(const SweepConfig &cfg);

/// Header `theta,verdict,margin,event_prob,ms`. The first column holds the swept value
/// whichever parameter was scanned. Without timing the ms column is written as 0.
std::string sweep_csv(const std::vector<SweepRow> &rows, bool timing = true);

}  // namespace netrigid
