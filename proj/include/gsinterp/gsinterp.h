/*
   Copyright 2026 The gsinterp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * C interface to libgsinterp: Reed-Solomon list decoding with binary
 * (ideal-multiplication) interpolation.
 *
 * Objects are opaque handles created by gsi_*_new / gsi_decode and released
 * by the matching gsi_*_free. Every fallible call returns a gsi_status; on
 * failure gsi_last_error() describes the problem for the calling thread.
 * Field elements travel as uint16_t holding the polynomial-basis bits.
 */

#ifndef GSINTERP_H
#define GSINTERP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define GSI_API __declspec(dllexport)
#else
#  define GSI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gsi_status {
    GSI_OK = 0,
    GSI_ERR_INVALID_ARGUMENT = 1,
    GSI_ERR_DEGREE_OUT_OF_RANGE = 2,
    GSI_ERR_NOT_PRIMITIVE = 3,
    GSI_ERR_DIVISION_BY_ZERO = 4,
    GSI_ERR_DUPLICATE_ABSCISSA = 5,
    GSI_ERR_ZERO_POLYNOMIAL = 6,
    GSI_ERR_NOT_GROEBNER_SHAPE = 7,
    GSI_ERR_PRECONDITION = 8,
    GSI_ERR_FALLBACK_EXHAUSTED = 9,
    GSI_ERR_INEXACT_DIVISION = 10,
    GSI_ERR_DEGREE_TOO_HIGH = 11,
    GSI_ERR_PARSE = 12,
    GSI_ERR_IO = 13,
    GSI_ERR_BUFFER_TOO_SMALL = 14,
    GSI_ERR_INTERNAL = 15
} gsi_status;

typedef enum gsi_algorithm {
    GSI_ALG_IIA = 0,
    GSI_ALG_LEE_OSULLIVAN = 1,
    GSI_ALG_BINARY = 2,
    GSI_ALG_BINARY_REENCODED = 3
} gsi_algorithm;

typedef struct gsi_field gsi_field;
typedef struct gsi_code gsi_code;
typedef struct gsi_result gsi_result;

typedef struct gsi_params {
    int rho;
    long long l;
    int tau;
} gsi_params;

typedef struct gsi_decode_stats {
    int merge_calls;
    int random_iterations;
    size_t reduce_steps;
    int fallback_used;
    int shortcut_taken;
} gsi_decode_stats;

typedef struct gsi_bench_config {
    int n;
    int k;
    unsigned m;
    uint32_t prim_poly;            /* 0: default for m */
    const int* r_values;
    size_t r_count;
    const gsi_algorithm* algorithms;
    size_t algorithm_count;
    int trials;
    uint64_t seed;
    int error_weight;              /* negative: n - tau(r) */
    int max_random_iterations;     /* 0: default (64) */
} gsi_bench_config;

GSI_API const char* gsi_version(void);
GSI_API const char* gsi_status_string(gsi_status status);
/* Message of the last failure on this thread; "" if none. */
GSI_API const char* gsi_last_error(void);

GSI_API gsi_status gsi_algorithm_from_name(const char* name, gsi_algorithm* out);
GSI_API const char* gsi_algorithm_name(gsi_algorithm alg);

/* prim_poly == 0 selects the built-in default for m. */
GSI_API gsi_status gsi_field_new(unsigned m, uint32_t prim_poly, gsi_field** out);
/* "m:poly_hex" */
GSI_API gsi_status gsi_field_parse(const char* spec, gsi_field** out);
GSI_API void gsi_field_free(gsi_field* field);
GSI_API unsigned gsi_field_m(const gsi_field* field);
GSI_API uint32_t gsi_field_poly(const gsi_field* field);
GSI_API uint16_t gsi_field_mul(const gsi_field* field, uint16_t a, uint16_t b);

/* Parses comma-separated hex symbols. *count receives the number parsed;
   GSI_ERR_BUFFER_TOO_SMALL if it exceeds cap. */
GSI_API gsi_status gsi_parse_symbols(const gsi_field* field, const char* text, uint16_t* out, size_t cap,
                                     size_t* count);

/* Locators alpha^0..alpha^(n-1). The code keeps its own reference to the field. */
GSI_API gsi_status gsi_code_new(const gsi_field* field, int n, int k, gsi_code** out);
GSI_API gsi_status gsi_code_new_with_locators(const gsi_field* field, int k, const uint16_t* locators, size_t n,
                                              gsi_code** out);
GSI_API void gsi_code_free(gsi_code* code);
GSI_API int gsi_code_n(const gsi_code* code);
GSI_API int gsi_code_k(const gsi_code* code);

GSI_API gsi_status gsi_gs_params(int n, int k, int r, gsi_params* out);

/* msg has msg_len <= k coefficients (degree ascending); out receives n symbols. */
GSI_API gsi_status gsi_encode(const gsi_code* code, const uint16_t* msg, size_t msg_len, uint16_t* out);

GSI_API gsi_status gsi_decode(const gsi_code* code, const uint16_t* received, size_t len, int r,
                              gsi_algorithm alg, uint64_t seed, int gao_shortcut, gsi_result** out);
GSI_API void gsi_result_free(gsi_result* result);
GSI_API size_t gsi_result_count(const gsi_result* result);
/* coeffs receives k coefficients (zero padded), degree ascending. */
GSI_API gsi_status gsi_result_candidate(const gsi_result* result, size_t index, uint16_t* coeffs, size_t cap,
                                        int* agreement);
GSI_API gsi_status gsi_result_params(const gsi_result* result, gsi_params* out);
GSI_API gsi_status gsi_result_stats(const gsi_result* result, gsi_decode_stats* out);
/* Text dumps. Writes at most cap bytes including the NUL; *needed receives the
   full size including the NUL. */
GSI_API gsi_status gsi_result_basis_text(const gsi_result* result, char* buf, size_t cap, size_t* needed);
GSI_API gsi_status gsi_result_poly_text(const gsi_result* result, char* buf, size_t cap, size_t* needed);
/* One "r,u,v,random_iterations,reduce_steps,fallback_used" row per Merge call,
   header first. */
GSI_API gsi_status gsi_result_merge_csv(const gsi_result* result, char* buf, size_t cap, size_t* needed);

/* Write CSV to out_path (NULL or "-": stdout); flushes each row, so an interrupted run keeps
   everything completed so far. */
GSI_API gsi_status gsi_bench_run(const gsi_bench_config* config, const char* out_path);
GSI_API gsi_status gsi_iterhist_run(const gsi_bench_config* config, const char* out_path);
/* Ask a running bench/iterhist to stop after the current trial (signal safe). */
GSI_API void gsi_request_stop(void);

#ifdef __cplusplus
}
#endif

#endif
