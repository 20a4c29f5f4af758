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

#include "core/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <thread>

#include "core/errors.hpp"

namespace netrigid {

std::vector<double> sweep_grid(const SweepConfig &cfg) {
    if (cfg.steps < 1) {
        fail_input("sweep needs at least one step");
    }
    if (!std::isfinite(cfg.from) || !std::isfinite(cfg.to)) {
        fail_input("sweep bounds must be finite");
    }
    if (cfg.log_scale && (cfg.from <= 0 || cfg.to <= 0)) {
        fail_input("logarithmic sweep needs positive bounds");
    }
    std::vector<double> grid;
    for (int k = 0; k < cfg.steps; k++) {
        double f = cfg.steps == 1 ? 0.0 : static_cast<double>(k) / (cfg.steps - 1);
        if (cfg.log_scale) {
            grid.push_back(std::exp(std::log(cfg.from) + f * (std::log(cfg.to) - std::log(cfg.from))));
        } else {
            grid.push_back(cfg.from + f * (cfg.to - cfg.from));
        }
    }
    return grid;
}

namespace {

SweepRow certify_point(const SweepConfig &cfg, double value) {
    auto start = std::chrono::steady_clock::now();
    CatalogParams params = cfg.base;
    if (cfg.parameter == SweepParameter::theta) {
        params.theta = value;
    } else {
        params.lambda = value;
    }
    CatalogInstance inst = make_catalog(cfg.catalog, params);
    CertificationReport rep = certify_nonlocality(inst.net, inst.strat, Event::all_ambiguous(), cfg.options);

    SweepRow row;
    row.value = value;
    row.verdict = rep.verdict;
    row.message = rep.message;
    if (rep.system) {
        row.event_probability = rep.system->event_probability;
    }
    if (rep.result) {
        if (const auto *inf = std::get_if<Infeasible>(&*rep.result)) {
            row.margin = inf->margin;
        }
    }
    row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig &cfg) {
    std::vector<double> grid = sweep_grid(cfg);
    // Fail fast on a bad catalog name before spawning anything.
    {
        CatalogParams probe = cfg.base;
        if (cfg.parameter == SweepParameter::theta) {
            probe.theta = grid.front();
        } else {
            probe.lambda = grid.front();
        }
        make_catalog(cfg.catalog, probe);
    }

    std::vector<SweepRow> rows(grid.size());
    unsigned workers = cfg.workers ? cfg.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(grid.size()));

    std::atomic<size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto work = [&] {
        for (size_t k = next++; k < grid.size(); k = next++) {
            try {
                rows[k] = certify_point(cfg, grid[k]);
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) {
                    failure = std::current_exception();
                }
                next = grid.size();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; w++) {
        pool.emplace_back(work);
    }
    work();
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    std::stable_sort(rows.begin(), rows.end(), [](const SweepRow &a, const SweepRow &b) { return a.value < b.value; });
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow> &rows, bool timing) {
    std::string out = "theta,verdict,margin,event_prob,ms\n";
    char buf[256];
    for (const auto &r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%s,%.17g,%.17g,%.3f\n", r.value, to_string(r.verdict).c_str(), r.margin,
                      r.event_probability, timing ? r.ms : 0.0);
        out += buf;
    }
    return out;
}

}  // namespace netrigid
