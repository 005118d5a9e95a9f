// Copyright 2026 The btgates Authors
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

#ifndef BTGATES_BTGATES_H_
#define BTGATES_BTGATES_H_

/* C interface to the btgates library: binary tetrahedral group arithmetic,
 * qubit and qudit primitive circuits, SNAP/displacement compilation, noisy
 * fidelity simulation, resource estimates and lattice Monte Carlo.
 *
 * Every function returns a btg_status. On failure a message is available
 * from btg_last_error() until the next call on the same thread. Strings
 * returned through char ** are owned by the caller and released with
 * btg_string_free(). Handles are released with their *_free function. */

#include <stddef.h>
#include <stdint.h>

#if defined(BTGATES_BUILDING_LIBRARY)
#define BTG_API __attribute__((visibility("default")))
#else
#define BTG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum btg_status {
    BTG_OK = 0,
    BTG_ERR_INVALID_ARGUMENT = 1,
    BTG_ERR_ENCODING = 2,
    BTG_ERR_INTERNAL = 3,
    BTG_ERR_NOT_UNITARY = 4,
    BTG_ERR_DIMENSION = 5,
    BTG_ERR_PARSE = 6,
    BTG_ERR_IO = 7,
    BTG_ERR_UNSUPPORTED = 8
} btg_status;

BTG_API const char *btg_version(void);
BTG_API const char *btg_last_error(void);
BTG_API const char *btg_status_name(btg_status status);
BTG_API void btg_string_free(char *s);

/* ---- group ---- */

BTG_API btg_status btg_group_multiply(int g, int h, int *out);
BTG_API btg_status btg_group_inverse(int g, int *out);
BTG_API btg_status btg_group_re_trace(int g, int *out);
BTG_API btg_status btg_group_element_order(int g, int *out);

typedef struct btg_group_check {
    int inverse_matches;     /* of 24 */
    int multiply_matches;    /* of 576 */
    double orthogonality_error;
    int class_data_ok;
    int published_mismatches; /* character-table entries differing from the printed table */
    int ok;
} btg_group_check;

BTG_API btg_status btg_group_check_run(btg_group_check *out);
/* kind: "elements" or "multiplication" */
BTG_API btg_status btg_group_table_csv(const char *kind, char **out);

/* ---- circuits ---- */

typedef struct btg_circuit btg_circuit;

enum { BTG_SYNTH_LOWER = 1, BTG_SYNTH_ROUTE = 2 };

/* primitive: inversion, mult, trace, fourier; arch: qubit or qudit. */
BTG_API btg_status btg_circuit_primitive(const char *primitive, const char *arch, double theta, int flags,
                                         btg_circuit **out);
BTG_API btg_status btg_circuit_from_text(const char *text, btg_circuit **out);
BTG_API void btg_circuit_free(btg_circuit *c);

BTG_API btg_status btg_circuit_is_qudit(const btg_circuit *c, int *out);
BTG_API btg_status btg_circuit_wires(const btg_circuit *c, int *out);
BTG_API btg_status btg_circuit_gate_count(const btg_circuit *c, size_t *out);
/* CNOTs with inserted SWAPs counted as three. */
BTG_API btg_status btg_circuit_cnot_count(const btg_circuit *c, size_t *out);
BTG_API btg_status btg_circuit_swap_count(const btg_circuit *c, size_t *out);
BTG_API btg_status btg_circuit_text(const btg_circuit *c, char **out);
BTG_API btg_status btg_circuit_counts_csv(const btg_circuit *c, char **out);

/* Row-major interleaved (re, im) unitary; `capacity` counts doubles. */
BTG_API btg_status btg_circuit_dimension(const btg_circuit *c, size_t *out);
BTG_API btg_status btg_circuit_unitary(const btg_circuit *c, double *out, size_t capacity);

typedef struct btg_verification {
    size_t checked;
    size_t correct;
    double max_error;
    int ok;
} btg_verification;

BTG_API btg_status btg_circuit_verify(const btg_circuit *c, const char *primitive, double theta, btg_verification *out);
BTG_API btg_status btg_verify_primitive(const char *primitive, const char *arch, double theta, btg_verification *out);

typedef struct btg_clifford_t_report {
    size_t t_gates;
    size_t rotations;
    double t_per_rotation;
    double t_count;
    int ancillas;
    size_t cnots;
} btg_clifford_t_report;

BTG_API btg_status btg_circuit_clifford_t(const btg_circuit *c, double eps, btg_clifford_t_report *out);

/* ---- SNAP / displacement compilation ---- */

typedef struct btg_snap_options {
    int truncation;       /* default 48 */
    uint64_t seed;        /* default 1 */
    int restarts;         /* default 4 */
    int max_iterations;   /* default 3000 */
    double target_infidelity;
} btg_snap_options;

typedef struct btg_snap_result btg_snap_result;

BTG_API void btg_snap_options_default(btg_snap_options *out);
/* target: "fourier" or "identity". */
BTG_API btg_status btg_compile_snap(const char *target, int layers, const btg_snap_options *options,
                                    btg_snap_result **out);
/* 24 x 24 row-major interleaved (re, im) target. */
BTG_API btg_status btg_compile_snap_matrix(const double *target, int layers, const btg_snap_options *options,
                                           btg_snap_result **out);
BTG_API void btg_snap_result_free(btg_snap_result *r);
BTG_API btg_status btg_snap_result_infidelity(const btg_snap_result *r, double *out);
BTG_API btg_status btg_snap_result_truncation_error(const btg_snap_result *r, double *out);
BTG_API btg_status btg_snap_result_restarts(const btg_snap_result *r, int *out);
BTG_API btg_status btg_snap_result_text(const btg_snap_result *r, char **out);

/* ---- noise and fidelity ---- */

typedef struct btg_noise_model {
    double depolarizing;  /* total two-qubit Pauli error rate per CNOT */
    double coherent_zx;   /* angle of exp(-i phi ZX / 2) after each CNOT */
} btg_noise_model;

typedef struct btg_fidelity_options {
    int shots;
    int twirls;
    uint64_t seed;
    int twirl;
} btg_fidelity_options;

typedef struct btg_fidelity_result {
    double fidelity;
    double error;
    size_t cnots;
} btg_fidelity_result;

typedef struct btg_experiment_summary {
    double trace_mean;
    double inversion_mean;
    double gi_inversion;
    size_t trace_cnots;
    size_t inversion_cnots;
} btg_experiment_summary;

BTG_API void btg_fidelity_options_default(btg_fidelity_options *out);
/* primitive: trace or inversion; state: "0".."23" or "GI". */
BTG_API btg_status btg_process_fidelity(const char *primitive, const char *state, double theta, const btg_noise_model *noise,
                                        const btg_fidelity_options *options, btg_fidelity_result *out);
/* CSV rows for every |g> of both primitives and |GI> of inversion; csv may be NULL. */
BTG_API btg_status btg_experiment_table(const btg_noise_model *noise, const btg_fidelity_options *options, double theta,
                                        btg_experiment_summary *summary, char **csv);
BTG_API btg_status btg_calibrate_depolarizing(double target, const btg_fidelity_options *options, double theta,
                                              double *out);

/* ---- resources ---- */

typedef struct btg_resource_spec {
    int d;
    int L;
    int nt;
    double eps;
} btg_resource_spec;

typedef struct btg_qudit_totals {
    double csnap;
    double snap;
    double displacement;
} btg_qudit_totals;

BTG_API btg_status btg_t_count_total(const btg_resource_spec *spec, double *out);
BTG_API btg_status btg_fourier_fraction(const btg_resource_spec *spec, double *out);
BTG_API btg_status btg_qudit_count_total(const btg_resource_spec *spec, btg_qudit_totals *out);
/* arch: qubit or qudit. */
BTG_API btg_status btg_resources_json(const btg_resource_spec *spec, const char *arch, char **out);

/* ---- lattice Monte Carlo ---- */

typedef struct btg_mc_options {
    int dims;            /* spacetime dimension, 2..4 */
    int extent;          /* default 4 */
    int thermalization;  /* default 500 */
    int measurements;    /* default 2000 */
    int bin_size;        /* default 20 */
    uint64_t seed;
    int hot_start;
} btg_mc_options;

typedef struct btg_mc_point {
    double beta;
    double e0;
    double error;
    double acceptance;
    int hot_start;
} btg_mc_point;

typedef struct btg_freezeout {
    double cold_beta;
    double hot_beta;
    double largest_jump;
    int hysteresis;
    double hysteresis_min;
    double hysteresis_max;
    double beta_f;
    double resolution;
} btg_freezeout;

typedef struct btg_mc_scan btg_mc_scan;

BTG_API void btg_mc_options_default(btg_mc_options *out);
BTG_API btg_status btg_mc_run(double beta_min, double beta_max, int steps, const btg_mc_options *options,
                              btg_mc_scan **out);
BTG_API void btg_mc_scan_free(btg_mc_scan *s);
BTG_API btg_status btg_mc_scan_size(const btg_mc_scan *s, size_t *out);
BTG_API btg_status btg_mc_scan_point(const btg_mc_scan *s, size_t index, btg_mc_point *out);
BTG_API btg_status btg_mc_scan_csv(const btg_mc_scan *s, char **out);
BTG_API btg_status btg_mc_freezeout(const btg_mc_scan *cold, const btg_mc_scan *hot, btg_freezeout *out);

#ifdef __cplusplus
}
#endif

#endif /* BTGATES_BTGATES_H_ */
