// Copyright 2026 The sondenet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SONDENET_SONDENET_H
#define SONDENET_SONDENET_H

/* C interface to the sondenet coverage library.
 *
 * Every fallible call returns an sn_status. On failure, sn_last_error() holds
 * a message for the calling thread until its next failing call. Strings and
 * buffers handed out by the library are owned by the caller and released with
 * sn_buffer_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SN_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SN_API __attribute__((visibility("default")))
#else
#define SN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sn_status {
    SN_OK = 0,
    SN_ERR_INVALID_ARGUMENT = 1, /* parameter invariant or null pointer */
    SN_ERR_DOMAIN = 2,           /* input outside an operation's domain */
    SN_ERR_CONFIG = 3,           /* config text or key=value override */
    SN_ERR_CONVERGENCE = 4,      /* quadrature budget exhausted */
    SN_ERR_IO = 5,
    SN_ERR_NO_MEMORY = 6,
    SN_ERR_INTERNAL = 7
} sn_status;

typedef enum sn_case_kind { SN_CASE1 = 0, SN_CASE2 = 1, SN_CASE3 = 2, SN_SPHERE = 3 } sn_case_kind;

typedef struct sn_case {
    sn_case_kind kind;
    /* SN_CASE3 mixture weights. */
    double p1, p2;
    /* SN_SPHERE radius; <= 0 uses the config's sphere_radius_km, then the
     * maximum slant distance. */
    double sphere_radius_km;
} sn_case;

typedef enum sn_method {
    SN_METHOD_ANALYTIC = 0,
    SN_METHOD_UPPER_BOUND = 1,
    SN_METHOD_MONTE_CARLO = 2
} sn_method;

typedef struct sn_cp_result {
    double cp;
    /* Quadrature error estimate, or the 95% CI half-width for Monte Carlo. */
    double error_estimate;
    double ci_low, ci_high;
    long long n_trials;
    sn_method method;
} sn_cp_result;

typedef struct sn_buffer {
    char* data; /* NUL-terminated */
    size_t size; /* excluding the terminator */
} sn_buffer;

/* Model, Monte Carlo and baseline settings. Defaults match the reference
 * parameter table; keys are listed by sn_params_emit. */
typedef struct sn_params sn_params;

SN_API sn_status sn_params_create(sn_params** out);
SN_API void sn_params_destroy(sn_params* params);
SN_API sn_status sn_params_clone(const sn_params* params, sn_params** out);
/* Apply a config file / text of key = value lines on top of current values. */
SN_API sn_status sn_params_load_file(sn_params* params, const char* path);
SN_API sn_status sn_params_load_text(sn_params* params, const char* text);
SN_API sn_status sn_params_set(sn_params* params, const char* key, const char* value);
SN_API sn_status sn_params_get(const sn_params* params, const char* key, sn_buffer* value);
SN_API sn_status sn_params_emit(const sn_params* params, sn_buffer* out);
SN_API sn_status sn_params_validate(const sn_params* params);

/* Single-threshold CP. Monte Carlo uses the trial count, seed, attenuation
 * mode and thread count held in params. */
SN_API sn_status sn_cp(const sn_params* params, sn_case c, sn_method method, double ts_db,
                       sn_cp_result* out);

/* Monte Carlo curve over n thresholds from one set of trials. */
SN_API sn_status sn_mc_curve(const sn_params* params, sn_case c, const double* ts_db, size_t n,
                             sn_cp_result* out);

/* Slant-distance law: closed form (with quadrature fallback where no closed
 * form exists) and the quadrature oracle. Any output pointer may be NULL. */
SN_API sn_status sn_distance_law(const sn_params* params, sn_case c, double l_km, double* pdf_closed,
                                 double* cdf_closed, double* pdf_oracle, double* cdf_oracle);

/* Grid description for sweeps. A NULL list keeps the preset's (or the
 * default) list; a non-NULL list with count 0 is an empty list and fails
 * validation. */
typedef struct sn_sweep_spec {
    const char* preset; /* NULL, or fig-lambda | fig-alpha | fig-epsilon | fig-sphere */
    const char* const* cases;
    size_t n_cases;
    const double* ts_db;
    size_t n_ts;
    const double* lambda_n;
    size_t n_lambda;
    const double* alpha;
    size_t n_alpha;
    const double* epsilon;
    size_t n_epsilon;
    const sn_method* methods;
    size_t n_methods;
} sn_sweep_spec;

SN_API sn_status sn_sweep(const sn_params* params, const sn_sweep_spec* spec, sn_buffer* csv);
/* Case 3 against the spherical baseline; `fraction` (may be NULL) receives the
 * share of grid points where Case 3 is at least the baseline. */
SN_API sn_status sn_compare(const sn_params* params, const sn_sweep_spec* spec, sn_buffer* csv,
                            double* fraction);
SN_API sn_status sn_dist_tables(const sn_params* params, sn_case c, int grid_size, sn_buffer* l_csv,
                                sn_buffer* h_csv);

SN_API void sn_buffer_free(sn_buffer* buf);

SN_API const char* sn_last_error(void);
/* Offending key of the last SN_ERR_CONFIG, or "" if none. */
SN_API const char* sn_last_error_key(void);
/* Best estimate carried by the last SN_ERR_CONVERGENCE. */
SN_API double sn_last_error_estimate(void);
SN_API const char* sn_status_name(sn_status status);
SN_API const char* sn_version(void);

#ifdef __cplusplus
}
#endif

#endif
