/* Copyright 2026 The netrigid Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef NETRIGID_NETRIGID_H_
#define NETRIGID_NETRIGID_H_

#include <stddef.h>
#include <stdint.h>

#if defined(NETRIGID_BUILDING_LIBRARY)
#define NR_API __attribute__((visibility("default")))
#else
#define NR_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every function returns an nr_status. On failure nr_last_error() describes the problem
 * (thread-local, valid until the next call on the same thread). Strings handed out through
 * char** parameters are owned by the caller and released with nr_string_free. */

typedef enum {
    NR_OK = 0,
    NR_ERR_INVALID_INPUT = 1,
    NR_ERR_CAPACITY = 2,
    NR_ERR_INDETERMINATE = 3,
    NR_ERR_NULL_ARGUMENT = 4,
    NR_ERR_INTERNAL = 5
} nr_status;

typedef enum {
    NR_VERDICT_NONLOCAL = 0,
    NR_VERDICT_INCONCLUSIVE = 1,
    NR_VERDICT_REFUSED = 2,
    NR_VERDICT_INDETERMINATE = 3
} nr_verdict;

typedef struct nr_network nr_network;
/* A network together with a quantum strategy on it. */
typedef struct nr_instance nr_instance;

typedef struct {
    double theta;      /* radians */
    int has_lambda;    /* nonzero: use lambda instead of sin(theta) for two-pattern families */
    double lambda;
    int asymmetric;    /* last party uses lambda = 1/sqrt(2) */
} nr_catalog_params;

typedef struct {
    int product_marginals; /* adds leave-one-out product rows */
    uint64_t config_cap;   /* 0 keeps the default of 2^24 */
} nr_certify_options;

typedef enum {
    NR_SWEEP_THETA = 0,
    NR_SWEEP_LAMBDA = 1
} nr_sweep_parameter;

typedef struct {
    nr_catalog_params base;
    nr_sweep_parameter parameter;
    double from;
    double to;
    int steps;
    int log_scale;
    unsigned workers; /* 0 picks the hardware concurrency */
    int timing;       /* zero writes 0 in the ms column for reproducible output */
    nr_certify_options certify;
} nr_scan_options;

NR_API const char *nr_version(void);
NR_API const char *nr_last_error(void);
NR_API void nr_string_free(char *s);
NR_API const char *nr_status_name(nr_status status);
NR_API const char *nr_verdict_name(nr_verdict verdict);

NR_API void nr_catalog_params_init(nr_catalog_params *params);
NR_API void nr_certify_options_init(nr_certify_options *options);
NR_API void nr_scan_options_init(nr_scan_options *options);

/* Newline-separated catalog names, e.g. "5-0\nring:n\n...". */
NR_API nr_status nr_catalog_list(char **out);

NR_API nr_status nr_network_from_json(const char *json, nr_network **out);
NR_API nr_status nr_network_build(const char *family, int n, nr_network **out); /* ring, complete, edge */
NR_API void nr_network_free(nr_network *net);
NR_API nr_status nr_network_to_json(const nr_network *net, char **out);
/* {"ndcs":bool, "ecs":bool, "pfis":{party:weight} | null, "parties":[...], "sources":n} */
NR_API nr_status nr_network_analyze(const nr_network *net, char **out);

NR_API nr_status nr_instance_from_catalog(const char *name, const nr_catalog_params *params, nr_instance **out);
NR_API nr_status nr_instance_from_json(const char *network_json, const char *strategy_json, nr_instance **out);
NR_API void nr_instance_free(nr_instance *inst);
NR_API nr_status nr_instance_network_json(const nr_instance *inst, char **out);
NR_API nr_status nr_instance_strategy_json(const nr_instance *inst, char **out);
/* {"ok":bool, "violations":[{"kind","where","detail"}]} */
NR_API nr_status nr_instance_validate(const nr_instance *inst, char **out);

/* Exact output distribution; `coarse` nonzero drops refinement indices first. */
NR_API nr_status nr_simulate(const nr_instance *inst, int coarse, char **out);
/* Decohered classical strategy as JSON. */
NR_API nr_status nr_decohere(const nr_instance *inst, char **out);

/* Report JSON in *out and the verdict in *verdict (either may be NULL). An INDETERMINATE
 * verdict is returned as NR_OK with the report filled in. */
NR_API nr_status nr_certify(const nr_instance *inst, const nr_certify_options *options, char **out,
                            nr_verdict *verdict);

/* CSV with header theta,verdict,margin,event_prob,ms. */
NR_API nr_status nr_scan(const char *catalog, const nr_scan_options *options, char **out);

/* `input_json` is either a distribution ({"atoms":...}) or a classical strategy. Indicators map
 * a party id to the label strings where g_j = 1; parties not listed have g_j = 1. Weights map
 * party ids to x_j; NULL uses the network's fractional independent set.
 * Output: {"lhs","rhs","gap","weights":{...}}. */
NR_API nr_status nr_finner(const nr_network *net, const char *input_json, const char *indicators_json,
                           const char *weights_json, char **out);

/* Feasibility problem in, certified result out; NR_ERR_INDETERMINATE when neither branch verifies. */
NR_API nr_status nr_solve_problem(const char *problem_json, char **out);
NR_API nr_status nr_verify_result(const char *problem_json, const char *result_json, int *ok);

#ifdef __cplusplus
}
#endif

#endif /* NETRIGID_NETRIGID_H_ */
