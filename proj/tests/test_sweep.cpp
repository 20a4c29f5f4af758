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

#include <cmath>

#include "core/errors.hpp"
#include "core/sweep.hpp"

namespace netrigid {
namespace {

SweepConfig five_zero(int steps, unsigned workers) {
    SweepConfig cfg;
    cfg.catalog = "5-0";
    cfg.from = 0;
    cfg.to = 0.7853981633974483;
    cfg.steps = steps;
    cfg.workers = workers;
    return cfg;
}

TEST(Sweep, LinearAndLogGrids) {
    auto cfg = five_zero(5, 1);
    cfg.from = 1;
    cfg.to = 2;
    EXPECT_EQ(sweep_grid(cfg), (std::vector<double>{1, 1.25, 1.5, 1.75, 2}));
    cfg.log_scale = true;
    cfg.to = 16;
    auto g = sweep_grid(cfg);
    for (size_t k = 0; k < g.size(); k++) {
        EXPECT_NEAR(g[k], std::pow(2.0, static_cast<double>(k)), 1e-12);
    }
    cfg.steps = 1;
    EXPECT_EQ(sweep_grid(cfg), std::vector<double>{1});
}

TEST(Sweep, BadGridsAreRejected) {
    auto cfg = five_zero(0, 1);
    EXPECT_THROW(sweep_grid(cfg), Error);
    cfg.steps = 3;
    cfg.log_scale = true;
    EXPECT_THROW(sweep_grid(cfg), Error);  // from = 0
    cfg.log_scale = false;
    cfg.to = std::nan("");
    EXPECT_THROW(sweep_grid(cfg), Error);
}

TEST(Sweep, RowsAreSortedAndWorkerCountDoesNotMatter) {
    auto cfg = five_zero(6, 1);
    cfg.from = 0.39269908169872414;  // descending grid ending at pi/8
    cfg.to = 0;
    auto serial = run_sweep(cfg);
    cfg.workers = 4;
    auto parallel = run_sweep(cfg);
    ASSERT_EQ(serial.size(), 6u);
    for (size_t k = 1; k < serial.size(); k++) {
        EXPECT_LT(serial[k - 1].value, serial[k].value);
    }
    EXPECT_EQ(sweep_csv(serial, false), sweep_csv(parallel, false));
    EXPECT_EQ(serial.front().verdict, Verdict::inconclusive);  // theta = 0
    EXPECT_EQ(serial.back().verdict, Verdict::nonlocal);
}

TEST(Sweep, CsvLayout) {
    auto rows = run_sweep(five_zero(2, 2));
    auto csv = sweep_csv(rows, false);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "theta,verdict,margin,event_prob,ms");
    EXPECT_NE(csv.find("\n0,INCONCLUSIVE,0,"), std::string::npos);
    EXPECT_NE(csv.find(",0.000\n"), std::string::npos);
}

TEST(Sweep, BadCatalogFailsFast) {
    auto cfg = five_zero(3, 2);
    cfg.catalog = "nope";
    EXPECT_THROW(run_sweep(cfg), Error);
    cfg.catalog = "5-0";
    cfg.parameter = SweepParameter::lambda;
    EXPECT_THROW(run_sweep(cfg), Error);
}

}  // namespace
}  // namespace netrigid
