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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "angle.hpp"
#include "netrigid/netrigid.h"

namespace {

using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInput = 2;
constexpr int kExitIndeterminate = 3;

struct Failure {
    int code;
    std::string message;
};

int exit_code(nr_status st) {
    switch (st) {
        case NR_OK:
            return kExitOk;
        case NR_ERR_INVALID_INPUT:
        case NR_ERR_CAPACITY:
        case NR_ERR_NULL_ARGUMENT:
            return kExitInput;
        case NR_ERR_INDETERMINATE:
            return kExitIndeterminate;
        case NR_ERR_INTERNAL:
            return kExitInternal;
    }
    return kExitInternal;
}

void check(nr_status st) {
    if (st != NR_OK) {
        throw Failure{exit_code(st), nr_last_error()};
    }
}

/// Takes ownership of a library-allocated string.
std::string take(char *s) {
    std::string out = s ? s : "";
    nr_string_free(s);
    return out;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{kExitInput, "cannot read '" + path + "'"};
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw Failure{kExitInput, "cannot write '" + path + "'"};
    }
}

Json parse(const std::string &text, const std::string &what) {
    try {
        return Json::parse(text);
    } catch (const Json::exception &e) {
        throw Failure{kExitInput, what + ": " + e.what()};
    }
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

struct NetworkPtr {
    nr_network *p = nullptr;
    ~NetworkPtr() {
        nr_network_free(p);
    }
};

struct InstancePtr {
    nr_instance *p = nullptr;
    ~InstancePtr() {
        nr_instance_free(p);
    }
};

/// Accepts a JSON file or a builder token: ring:n, complete:n (kn:n), edge:n.
void load_network(const std::string &arg, NetworkPtr &net) {
    auto colon = arg.find(':');
    if (colon != std::string::npos) {
        std::string family = arg.substr(0, colon);
        if (family == "kn") {
            family = "complete";
        }
        if (family == "ring" || family == "complete" || family == "edge") {
            int n = 0;
            try {
                n = std::stoi(arg.substr(colon + 1));
            } catch (const std::exception &) {
                throw Failure{kExitInput, "bad network size in '" + arg + "'"};
            }
            check(nr_network_build(family.c_str(), n, &net.p));
            return;
        }
    }
    check(nr_network_from_json(read_file(arg).c_str(), &net.p));
}

struct Target {
    std::string name;  // catalog name, or empty when files are given
    std::string network_file;
    std::string strategy_file;
    std::string theta = "pi/8";
    std::optional<double> lambda;
    bool asymmetric = false;
};

void add_target_options(CLI::App *cmd, Target &t) {
    cmd->add_option("catalog", t.name, "catalog name: 5-0, 1-2, ring:n, ring-cm:n, kn:n, coloring:n");
    cmd->add_option("--network", t.network_file, "network JSON (with --strategy instead of a catalog name)");
    cmd->add_option("--strategy", t.strategy_file, "quantum strategy JSON");
    cmd->add_option("--theta", t.theta, "rotation angle: radians or pi/k form")->capture_default_str();
    cmd->add_option("--lambda", t.lambda, "reflection parameter of the two-pattern families");
    cmd->add_flag("--asym", t.asymmetric, "last party uses lambda = 1/sqrt(2)");
}

void load_instance(const Target &t, InstancePtr &inst) {
    if (!t.name.empty()) {
        if (!t.network_file.empty() || !t.strategy_file.empty()) {
            throw Failure{kExitInput, "give either a catalog name or --network/--strategy files"};
        }
        nr_catalog_params params;
        nr_catalog_params_init(&params);
        try {
            params.theta = netrigid_cli::parse_angle(t.theta);
        } catch (const std::exception &e) {
            throw Failure{kExitInput, e.what()};
        }
        if (t.lambda) {
            params.has_lambda = 1;
            params.lambda = *t.lambda;
        }
        params.asymmetric = t.asymmetric ? 1 : 0;
        check(nr_instance_from_catalog(t.name.c_str(), &params, &inst.p));
        return;
    }
    if (t.network_file.empty() || t.strategy_file.empty()) {
        throw Failure{kExitInput, "need a catalog name or both --network and --strategy"};
    }
    check(nr_instance_from_json(read_file(t.network_file).c_str(), read_file(t.strategy_file).c_str(), &inst.p));
}

int cmd_analyze(const std::string &network, bool json) {
    NetworkPtr net;
    load_network(network, net);
    char *out = nullptr;
    check(nr_network_analyze(net.p, &out));
    std::string report = take(out);
    if (json) {
        std::cout << report;
        return kExitOk;
    }
    Json r = parse(report, "analysis");
    std::cout << "NDCS:" << (r["ndcs"].get<bool>() ? "true" : "false")
              << " ECS:" << (r["ecs"].get<bool>() ? "true" : "false") << " PFIS:";
    if (r["pfis"].is_null()) {
        std::cout << "none";
    } else {
        std::cout << "[";
        bool first = true;
        for (const auto &p : r["parties"]) {
            std::cout << (first ? "" : ",") << fmt(r["pfis"][p.get<std::string>()].get<double>());
            first = false;
        }
        std::cout << "]";
    }
    std::cout << "\n";
    return kExitOk;
}

int cmd_simulate(const Target &t, bool coarse, const std::string &output, bool json) {
    InstancePtr inst;
    load_instance(t, inst);
    char *out = nullptr;
    check(nr_simulate(inst.p, coarse ? 1 : 0, &out));
    std::string dist = take(out);
    if (!output.empty()) {
        write_file(output, dist);
    }
    if (json) {
        std::cout << dist;
        return kExitOk;
    }
    if (!output.empty()) {
        return kExitOk;
    }
    Json d = parse(dist, "distribution");
    for (const auto &atom : d["atoms"]) {
        std::string key = "(";
        bool first = true;
        for (const auto &o : atom["outputs"]) {
            key += (first ? "" : ",") + o.get<std::string>();
            first = false;
        }
        std::cout << key << ") " << fmt(atom["p"].get<double>()) << "\n";
    }
    return kExitOk;
}

int cmd_certify(const Target &t, bool product, const std::string &output, bool json) {
    InstancePtr inst;
    load_instance(t, inst);
    nr_certify_options options;
    nr_certify_options_init(&options);
    options.product_marginals = product ? 1 : 0;
    char *out = nullptr;
    nr_verdict verdict = NR_VERDICT_REFUSED;
    check(nr_certify(inst.p, &options, &out, &verdict));
    std::string report = take(out);
    if (!output.empty()) {
        write_file(output, report);
    }
    if (json) {
        std::cout << report;
    } else {
        Json r = parse(report, "report");
        std::cout << "verdict: " << r["verdict"].get<std::string>() << "\n";
        std::cout << "hypotheses: " << r["hypotheses"]["statement"].get<std::string>() << "\n";
        if (r.contains("event_probability")) {
            std::cout << "event: " << r["event"].get<std::string>() << " with probability "
                      << fmt(r["event_probability"].get<double>()) << "\n";
            std::cout << "patterns: " << r["patterns"].size() << " (" << r["provenance"].get<std::string>() << ")\n";
        }
        if (r.contains("lp")) {
            std::cout << "lp: " << r["lp"]["variables"].get<size_t>() << " variables, " << r["lp"]["rows"].get<size_t>()
                      << " rows\n";
        }
        if (r.contains("margin")) {
            std::cout << "margin: " << fmt(r["margin"].get<double>()) << "\n";
        }
        if (r.contains("result")) {
            std::cout << "verified: " << (r["verified"].get<bool>() ? "yes" : "no") << "\n";
        }
        std::cout << r["message"].get<std::string>() << "\n";
    }
    return verdict == NR_VERDICT_INDETERMINATE ? kExitIndeterminate : kExitOk;
}

struct ScanArgs {
    std::string catalog;
    std::string param = "theta";
    std::string from;
    std::string to;
    int steps = 16;
    bool log_scale = false;
    std::string theta = "pi/8";
    bool asymmetric = false;
    unsigned workers = 0;
    bool no_timing = false;
    bool product = false;
    std::string output;
};

int cmd_scan(const ScanArgs &a) {
    nr_scan_options options;
    nr_scan_options_init(&options);
    try {
        if (a.param == "theta") {
            options.parameter = NR_SWEEP_THETA;
            options.from = netrigid_cli::parse_angle(a.from);
            options.to = netrigid_cli::parse_angle(a.to);
        } else {
            options.parameter = NR_SWEEP_LAMBDA;
            options.from = std::stod(a.from);
            options.to = std::stod(a.to);
            options.base.theta = netrigid_cli::parse_angle(a.theta);
        }
    } catch (const std::exception &e) {
        throw Failure{kExitInput, std::string("bad scan range: ") + e.what()};
    }
    options.steps = a.steps;
    options.log_scale = a.log_scale ? 1 : 0;
    options.base.asymmetric = a.asymmetric ? 1 : 0;
    options.workers = a.workers;
    options.timing = a.no_timing ? 0 : 1;
    options.certify.product_marginals = a.product ? 1 : 0;
    char *out = nullptr;
    check(nr_scan(a.catalog.c_str(), &options, &out));
    std::string csv = take(out);
    if (a.output.empty()) {
        std::cout << csv;
    } else {
        write_file(a.output, csv);
    }
    return kExitOk;
}

struct FinnerArgs {
    std::string network;
    std::string input;
    std::string indicators;
    std::string weights;
};

std::string inline_or_file(const std::string &arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') {
        return arg;
    }
    return read_file(arg);
}

int cmd_finner(const FinnerArgs &a, bool json) {
    NetworkPtr net;
    load_network(a.network, net);
    std::string input = read_file(a.input);
    std::string indicators = inline_or_file(a.indicators);
    std::string weights = a.weights.empty() ? "" : inline_or_file(a.weights);
    char *out = nullptr;
    check(nr_finner(net.p, input.c_str(), indicators.c_str(), a.weights.empty() ? nullptr : weights.c_str(), &out));
    std::string report = take(out);
    if (json) {
        std::cout << report;
        return kExitOk;
    }
    Json r = parse(report, "finner");
    std::cout << "lhs=" << fmt(r["lhs"].get<double>()) << " rhs=" << fmt(r["rhs"].get<double>())
              << " gap=" << fmt(r["gap"].get<double>()) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum network rigidity workbench: structure checks, exact simulation and nonlocality certificates"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "structured output on standard output");
    app.set_version_flag("--version", std::string(nr_version()));

    std::string analyze_net;
    auto *analyze = app.add_subcommand("analyze", "NDCS, ECS and fractional independent set of a network");
    analyze->add_option("network", analyze_net, "network JSON file or ring:n, complete:n, edge:n")->required();
    analyze->fallthrough();

    Target sim_target;
    bool coarse = false;
    std::string sim_out;
    auto *simulate = app.add_subcommand("simulate", "exact output distribution");
    add_target_options(simulate, sim_target);
    simulate->add_flag("--coarse", coarse, "drop refinement indices (token counts and colors only)");
    simulate->add_option("-o,--output", sim_out, "write the distribution JSON here");
    simulate->fallthrough();

    Target cert_target;
    bool product = false;
    std::string cert_out;
    auto *certify = app.add_subcommand("certify", "run the rigidity LP and report a verdict");
    add_target_options(certify, cert_target);
    certify->add_flag("--product-marginals", product, "add leave-one-out product rows (heuristic)");
    certify->add_option("-o,--output", cert_out, "write the report JSON here");
    certify->fallthrough();

    ScanArgs scan_args;
    auto *scan = app.add_subcommand("scan", "certify over a parameter grid, CSV output");
    scan->add_option("catalog", scan_args.catalog, "catalog name")->required();
    scan->add_option("--param", scan_args.param, "swept parameter")
        ->check(CLI::IsMember({"theta", "lambda"}))
        ->capture_default_str();
    scan->add_option("--from", scan_args.from, "first grid value")->required();
    scan->add_option("--to", scan_args.to, "last grid value")->required();
    scan->add_option("--steps", scan_args.steps, "number of grid points")->capture_default_str();
    scan->add_flag("--log", scan_args.log_scale, "geometric spacing");
    scan->add_option("--theta", scan_args.theta, "fixed angle when sweeping lambda")->capture_default_str();
    scan->add_flag("--asym", scan_args.asymmetric, "last party uses lambda = 1/sqrt(2)");
    scan->add_option("--workers", scan_args.workers, "worker threads (0 = all cores)");
    scan->add_flag("--no-timing", scan_args.no_timing, "write 0 in the ms column");
    scan->add_flag("--product-marginals", scan_args.product, "add leave-one-out product rows (heuristic)");
    scan->add_option("-o,--output", scan_args.output, "write the CSV here");
    scan->fallthrough();

    FinnerArgs finner_args;
    auto *finner = app.add_subcommand("finner", "Finner inequality on a distribution or classical strategy");
    finner->add_option("--network", finner_args.network, "network JSON file or ring:n, complete:n, edge:n")->required();
    finner->add_option("--input", finner_args.input, "distribution or classical strategy JSON")->required();
    finner->add_option("--indicators", finner_args.indicators, "party -> accepted label strings (file or inline JSON)")
        ->required();
    finner->add_option("--weights", finner_args.weights, "party -> weight (file or inline JSON); default: computed");
    finner->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*analyze) {
            return cmd_analyze(analyze_net, json);
        }
        if (*simulate) {
            return cmd_simulate(sim_target, coarse, sim_out, json);
        }
        if (*certify) {
            return cmd_certify(cert_target, product, cert_out, json);
        }
        if (*scan) {
            return cmd_scan(scan_args);
        }
        if (*finner) {
            return cmd_finner(finner_args, json);
        }
    } catch (const Failure &f) {
        std::cerr << "error: " << f.message << "\n";
        return f.code;
    }
    return kExitInput;
}
