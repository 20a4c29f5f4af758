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

#include "netrigid/netrigid.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <set>
#include <string>

#include "core/catalog.hpp"
#include "core/errors.hpp"
#include "core/serialize.hpp"
#include "core/sweep.hpp"

struct nr_network {
    netrigid::Network net;
};

struct nr_instance {
    netrigid::CatalogInstance inst;
};

namespace {

using netrigid::Json;

thread_local std::string last_error;

nr_status set_error(nr_status status, const std::string &message) {
    last_error = message;
    return status;
}

/// Runs `body`, translating exceptions into status codes.
template <class F>
nr_status guarded(F &&body) {
    try {
        last_error.clear();
        body();
        return NR_OK;
    } catch (const netrigid::Error &e) {
        switch (e.kind()) {
            case netrigid::ErrorKind::invalid_input:
                return set_error(NR_ERR_INVALID_INPUT, e.what());
            case netrigid::ErrorKind::capacity:
                return set_error(NR_ERR_CAPACITY, e.what());
            case netrigid::ErrorKind::indeterminate:
                return set_error(NR_ERR_INDETERMINATE, e.what());
        }
        return set_error(NR_ERR_INTERNAL, e.what());
    } catch (const Json::exception &e) {
        return set_error(NR_ERR_INVALID_INPUT, e.what());
    } catch (const std::bad_alloc &) {
        return set_error(NR_ERR_CAPACITY, "out of memory");
    } catch (const std::exception &e) {
        return set_error(NR_ERR_INTERNAL, e.what());
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char **out, const std::string &s) {
    if (out) {
        *out = dup_string(s);
    }
}

void emit(char **out, const Json &j) {
    emit(out, j.dump(2) + "\n");
}

netrigid::CatalogParams to_params(const nr_catalog_params *p) {
    netrigid::CatalogParams params;
    if (p) {
        params.theta = p->theta;
        if (p->has_lambda) {
            params.lambda = p->lambda;
        }
        params.asymmetric = p->asymmetric != 0;
    }
    return params;
}

netrigid::QSystemOptions to_options(const nr_certify_options *o) {
    netrigid::QSystemOptions options;
    if (o) {
        options.product_marginals = o->product_marginals != 0;
        if (o->config_cap) {
            options.config_cap = o->config_cap;
        }
    }
    return options;
}

nr_verdict to_c(netrigid::Verdict v) {
    switch (v) {
        case netrigid::Verdict::nonlocal:
            return NR_VERDICT_NONLOCAL;
        case netrigid::Verdict::inconclusive:
            return NR_VERDICT_INCONCLUSIVE;
        case netrigid::Verdict::refused:
            return NR_VERDICT_REFUSED;
        case netrigid::Verdict::indeterminate:
            return NR_VERDICT_INDETERMINATE;
    }
    return NR_VERDICT_REFUSED;
}

bool null_guard(const void *p, const char *name, nr_status *status) {
    if (!p) {
        *status = set_error(NR_ERR_NULL_ARGUMENT, std::string("null argument: ") + name);
        return true;
    }
    return false;
}

}  // namespace

extern "C" {

const char *nr_version(void) {
    return "0.1.0";
}

const char *nr_last_error(void) {
    return last_error.c_str();
}

void nr_string_free(char *s) {
    std::free(s);
}

const char *nr_status_name(nr_status status) {
    switch (status) {
        case NR_OK:
            return "ok";
        case NR_ERR_INVALID_INPUT:
            return "invalid input";
        case NR_ERR_CAPACITY:
            return "capacity exceeded";
        case NR_ERR_INDETERMINATE:
            return "numerically indeterminate";
        case NR_ERR_NULL_ARGUMENT:
            return "null argument";
        case NR_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *nr_verdict_name(nr_verdict verdict) {
    switch (verdict) {
        case NR_VERDICT_NONLOCAL:
            return "NONLOCAL";
        case NR_VERDICT_INCONCLUSIVE:
            return "INCONCLUSIVE";
        case NR_VERDICT_REFUSED:
            return "REFUSED";
        case NR_VERDICT_INDETERMINATE:
            return "INDETERMINATE";
    }
    return "REFUSED";
}

void nr_catalog_params_init(nr_catalog_params *params) {
    if (!params) {
        return;
    }
    netrigid::CatalogParams defaults;
    params->theta = defaults.theta;
    params->has_lambda = 0;
    params->lambda = 0;
    params->asymmetric = 0;
}

void nr_certify_options_init(nr_certify_options *options) {
    if (!options) {
        return;
    }
    options->product_marginals = 0;
    options->config_cap = 0;
}

void nr_scan_options_init(nr_scan_options *options) {
    if (!options) {
        return;
    }
    nr_catalog_params_init(&options->base);
    options->parameter = NR_SWEEP_THETA;
    options->from = 0;
    options->to = 0;
    options->steps = 1;
    options->log_scale = 0;
    options->workers = 0;
    options->timing = 1;
    nr_certify_options_init(&options->certify);
}

nr_status nr_catalog_list(char **out) {
    nr_status st;
    if (null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        std::string s;
        for (const auto &name : netrigid::catalog_names()) {
            s += name + "\n";
        }
        emit(out, s);
    });
}

nr_status nr_network_from_json(const char *json, nr_network **out) {
    nr_status st;
    if (null_guard(json, "json", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    *out = nullptr;
    return guarded([&] {
        auto net = netrigid::network_from_json(netrigid::parse_json(json));
        *out = new nr_network{std::move(net)};
    });
}

nr_status nr_network_build(const char *family, int n, nr_network **out) {
    nr_status st;
    if (null_guard(family, "family", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    *out = nullptr;
    return guarded([&] {
        std::string f = family;
        std::optional<netrigid::Network> net;
        if (f == "ring") {
            net = netrigid::build_ring(n);
        } else if (f == "complete") {
            net = netrigid::build_complete(n);
        } else if (f == "edge") {
            net = netrigid::build_edge_network(n);
        } else {
            netrigid::fail_input("network family must be ring, complete or edge, got '" + f + "'");
        }
        *out = new nr_network{std::move(*net)};
    });
}

void nr_network_free(nr_network *net) {
    delete net;
}

nr_status nr_network_to_json(const nr_network *net, char **out) {
    nr_status st;
    if (null_guard(net, "net", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] { emit(out, netrigid::to_json(net->net)); });
}

nr_status nr_network_analyze(const nr_network *net, char **out) {
    nr_status st;
    if (null_guard(net, "net", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        const auto &n = net->net;
        Json parties = Json::array();
        for (size_t j = 0; j < n.num_parties(); j++) {
            parties.push_back(n.party_id(j));
        }
        Json report = {{"ndcs", netrigid::check_ndcs(n)},
                       {"ecs", netrigid::check_ecs(n)},
                       {"parties", parties},
                       {"sources", n.num_sources()}};
        auto w = netrigid::find_pfis(n);
        if (w) {
            Json jw = Json::object();
            for (size_t j = 0; j < n.num_parties(); j++) {
                jw[n.party_id(j)] = w->weights[j];
            }
            report["pfis"] = jw;
        } else {
            report["pfis"] = nullptr;
        }
        emit(out, report);
    });
}

nr_status nr_instance_from_catalog(const char *name, const nr_catalog_params *params, nr_instance **out) {
    nr_status st;
    if (null_guard(name, "name", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    *out = nullptr;
    return guarded([&] { *out = new nr_instance{netrigid::make_catalog(name, to_params(params))}; });
}

nr_status nr_instance_from_json(const char *network_json, const char *strategy_json, nr_instance **out) {
    nr_status st;
    if (null_guard(network_json, "network_json", &st) || null_guard(strategy_json, "strategy_json", &st) ||
        null_guard(out, "out", &st)) {
        return st;
    }
    *out = nullptr;
    return guarded([&] {
        auto net = netrigid::network_from_json(netrigid::parse_json(network_json));
        auto strat = netrigid::strategy_from_json(net, netrigid::parse_json(strategy_json));
        *out = new nr_instance{{std::move(net), std::move(strat)}};
    });
}

void nr_instance_free(nr_instance *inst) {
    delete inst;
}

nr_status nr_instance_network_json(const nr_instance *inst, char **out) {
    nr_status st;
    if (null_guard(inst, "inst", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] { emit(out, netrigid::to_json(inst->inst.net)); });
}

nr_status nr_instance_strategy_json(const nr_instance *inst, char **out) {
    nr_status st;
    if (null_guard(inst, "inst", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] { emit(out, netrigid::to_json(inst->inst.strat)); });
}

nr_status nr_instance_validate(const nr_instance *inst, char **out) {
    nr_status st;
    if (null_guard(inst, "inst", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        auto rep = netrigid::validate_strategy(inst->inst.net, inst->inst.strat);
        Json v = Json::array();
        for (const auto &x : rep.violations) {
            v.push_back({{"kind", x.kind}, {"where", x.where}, {"detail", x.detail}});
        }
        emit(out, Json{{"ok", rep.ok()}, {"violations", v}});
    });
}

nr_status nr_simulate(const nr_instance *inst, int coarse, char **out) {
    nr_status st;
    if (null_guard(inst, "inst", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        const auto &[net, strat] = inst->inst;
        netrigid::require_valid(net, strat);
        auto dist = netrigid::joint_distribution(net, strat);
        if (coarse) {
            dist = netrigid::coarse_grain(dist);
        }
        emit(out, netrigid::to_json(net, dist));
    });
}

nr_status nr_decohere(const nr_instance *inst, char **out) {
    nr_status st;
    if (null_guard(inst, "inst", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        const auto &[net, strat] = inst->inst;
        netrigid::require_valid(net, strat);
        emit(out, netrigid::to_json(netrigid::decohere(net, strat)));
    });
}

nr_status nr_certify(const nr_instance *inst, const nr_certify_options *options, char **out, nr_verdict *verdict) {
    nr_status st;
    if (null_guard(inst, "inst", &st)) {
        return st;
    }
    return guarded([&] {
        const auto &[net, strat] = inst->inst;
        auto rep = netrigid::certify_nonlocality(net, strat, netrigid::Event::all_ambiguous(), to_options(options));
        if (verdict) {
            *verdict = to_c(rep.verdict);
        }
        emit(out, netrigid::to_json(net, rep));
    });
}

nr_status nr_scan(const char *catalog, const nr_scan_options *options, char **out) {
    nr_status st;
    if (null_guard(catalog, "catalog", &st) || null_guard(options, "options", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        netrigid::SweepConfig cfg;
        cfg.catalog = catalog;
        cfg.base = to_params(&options->base);
        cfg.parameter =
            options->parameter == NR_SWEEP_LAMBDA ? netrigid::SweepParameter::lambda : netrigid::SweepParameter::theta;
        cfg.from = options->from;
        cfg.to = options->to;
        cfg.steps = options->steps;
        cfg.log_scale = options->log_scale != 0;
        cfg.workers = options->workers;
        cfg.options = to_options(&options->certify);
        emit(out, netrigid::sweep_csv(netrigid::run_sweep(cfg), options->timing != 0));
    });
}

nr_status nr_finner(const nr_network *net, const char *input_json, const char *indicators_json,
                    const char *weights_json, char **out) {
    nr_status st;
    if (null_guard(net, "net", &st) || null_guard(input_json, "input_json", &st) ||
        null_guard(indicators_json, "indicators_json", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        const auto &n = net->net;
        Json input = netrigid::parse_json(input_json);
        Json ind = netrigid::parse_json(indicators_json);
        if (!ind.is_object()) {
            netrigid::fail_input("indicators must map party ids to label lists");
        }
        std::vector<std::optional<std::set<std::string>>> accept(n.num_parties());
        for (const auto &[party, labels] : ind.items()) {
            auto j = n.find_party(party);
            if (!j) {
                netrigid::fail_input("indicators reference unknown party '" + party + "'");
            }
            if (!labels.is_array()) {
                netrigid::fail_input("indicators." + party + " must be an array of label strings");
            }
            std::set<std::string> s;
            for (const auto &l : labels) {
                if (!l.is_string()) {
                    netrigid::fail_input("indicators." + party + " must be an array of label strings");
                }
                s.insert(l.get<std::string>());
            }
            accept[*j] = std::move(s);
        }
        netrigid::Indicator indicator = [&](size_t j, const netrigid::OutcomeLabel &l) {
            return !accept[j] || accept[j]->count(netrigid::to_string(l)) > 0;
        };

        netrigid::PfisWeights w;
        if (weights_json) {
            Json jw = netrigid::parse_json(weights_json);
            if (!jw.is_object()) {
                netrigid::fail_input("weights must map party ids to numbers");
            }
            w.weights.assign(n.num_parties(), -1.0);
            for (const auto &[party, x] : jw.items()) {
                auto j = n.find_party(party);
                if (!j || !x.is_number()) {
                    netrigid::fail_input("weights entry '" + party + "' is not a known party with a numeric weight");
                }
                w.weights[*j] = x.get<double>();
            }
            if (!netrigid::is_valid_pfis(n, w)) {
                netrigid::fail_input("weights are not a fractional independent set of the network");
            }
        } else {
            auto found = netrigid::find_pfis(n);
            if (!found) {
                netrigid::fail_input("network admits no perfect fractional independent set");
            }
            w = *found;
        }

        netrigid::FinnerResult r;
        if (input.contains("atoms")) {
            r = netrigid::finner_check(n, netrigid::distribution_from_json(n, input), w, indicator);
        } else {
            r = netrigid::finner_check(n, netrigid::classical_from_json(n, input), w, indicator);
        }
        Json jw = Json::object();
        for (size_t j = 0; j < n.num_parties(); j++) {
            jw[n.party_id(j)] = w.weights[j];
        }
        emit(out, Json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"gap", r.gap}, {"weights", jw}});
    });
}

nr_status nr_solve_problem(const char *problem_json, char **out) {
    nr_status st;
    if (null_guard(problem_json, "problem_json", &st) || null_guard(out, "out", &st)) {
        return st;
    }
    return guarded([&] {
        auto p = netrigid::problem_from_json(netrigid::parse_json(problem_json));
        auto r = netrigid::solve_feasibility(p);
        emit(out, netrigid::to_json(p, r));
    });
}

nr_status nr_verify_result(const char *problem_json, const char *result_json, int *ok) {
    nr_status st;
    if (null_guard(problem_json, "problem_json", &st) || null_guard(result_json, "result_json", &st) ||
        null_guard(ok, "ok", &st)) {
        return st;
    }
    return guarded([&] {
        auto p = netrigid::problem_from_json(netrigid::parse_json(problem_json));
        auto r = netrigid::result_from_json(p, netrigid::parse_json(result_json));
        *ok = netrigid::verify_certificate(p, r) ? 1 : 0;
    });
}

}  // extern "C"
