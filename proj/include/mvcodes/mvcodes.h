// Copyright 2026 The mvcodes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the mvcodes library: multivariate polynomial codes for
 * distributed matrix chain multiplication over a prime field.
 *
 * Objects are opaque handles created by mvc_*_create-style calls and released
 * with the matching *_destroy. Every fallible call returns an mvc_status;
 * on failure mvc_last_error() describes the problem (thread-local, valid
 * until the next library call on the same thread). Strings returned through
 * char** out-parameters are heap allocated and must be released with
 * mvc_string_free.
 */
#ifndef MVCODES_MVCODES_H_
#define MVCODES_MVCODES_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(MVCODES_BUILDING)
#    define MVC_API __declspec(dllexport)
#  else
#    define MVC_API __declspec(dllimport)
#  endif
#else
#  define MVC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mvc_status {
  MVC_OK = 0,
  MVC_ERR_INVALID_ARGUMENT = 1,
  MVC_ERR_NOT_PRIME = 2,
  MVC_ERR_ZERO_INVERSE = 3,
  MVC_ERR_DIMENSION_MISMATCH = 4,
  MVC_ERR_INDIVISIBLE_DIMENSION = 5,
  MVC_ERR_CHAIN_SHAPE_MISMATCH = 6,
  MVC_ERR_INDEX_OUT_OF_RANGE = 7,
  MVC_ERR_MISSING_BLOCK = 8,
  MVC_ERR_DUPLICATE_POINT = 9,
  MVC_ERR_SHAPE_MISMATCH = 10,
  MVC_ERR_POINT_ARITY_MISMATCH = 11,
  MVC_ERR_MISSING_EVALUATION = 12,
  MVC_ERR_DEGREE_MISMATCH = 13,
  MVC_ERR_SINGULAR_SYSTEM = 14,
  MVC_ERR_INFEASIBLE_PLAN = 15,
  MVC_ERR_NON_INTEGRAL_ASSIGNMENT = 16,
  MVC_ERR_NEVER_DECODABLE = 17,
  MVC_ERR_PARSE = 18,
  MVC_ERR_IO = 19,
  MVC_ERR_INTERNAL = 20
} mvc_status;

typedef enum mvc_scheme {
  MVC_SCHEME_UV = 0, /* closed-form metrics only */
  MVC_SCHEME_MV1 = 1,
  MVC_SCHEME_MV2 = 2
} mvc_scheme;

typedef enum mvc_memory {
  MVC_MEMORY_SHARED = 0,
  MVC_MEMORY_DEDICATED = 1
} mvc_memory;

/* MV2 interior axis size: 2p-1 (minimal) or 2p+1 (oversampled). */
typedef enum mvc_axis_convention {
  MVC_AXIS_DEGREE_PLUS_ONE = 0,
  MVC_AXIS_ODD_PLUS_TWO = 1
} mvc_axis_convention;

typedef enum mvc_figure {
  MVC_FIGURE_COMPUTATION_VS_P = 2,
  MVC_FIGURE_STORAGE_VS_P = 3,
  MVC_FIGURE_STORAGE_VS_N = 4,
  MVC_TABLE_OVERHEADS = 1
} mvc_figure;

typedef enum mvc_latency_family {
  MVC_LATENCY_SHIFTED_EXPONENTIAL = 0,
  MVC_LATENCY_DETERMINISTIC = 1
} mvc_latency_family;

typedef struct mvc_field mvc_field;
typedef struct mvc_matrix mvc_matrix;
typedef struct mvc_chain mvc_chain;
typedef struct mvc_plan mvc_plan;

MVC_API const char* mvc_version(void);
MVC_API const char* mvc_status_name(mvc_status status);
MVC_API const char* mvc_last_error(void);
MVC_API void mvc_string_free(char* s);

/* ---- prime field ---- */

/* modulus 0 selects the default 2^31 - 1. */
MVC_API mvc_status mvc_field_create(uint64_t modulus, mvc_field** out);
MVC_API void mvc_field_destroy(mvc_field* field);
MVC_API uint64_t mvc_field_modulus(const mvc_field* field);
MVC_API mvc_status mvc_field_mul(const mvc_field* field, uint64_t a, uint64_t b, uint64_t* out);
MVC_API mvc_status mvc_field_inv(const mvc_field* field, uint64_t a, uint64_t* out);

/* ---- matrices ---- */

MVC_API mvc_status mvc_matrix_create(size_t rows, size_t cols, mvc_matrix** out);
MVC_API void mvc_matrix_destroy(mvc_matrix* m);
MVC_API size_t mvc_matrix_rows(const mvc_matrix* m);
MVC_API size_t mvc_matrix_cols(const mvc_matrix* m);
MVC_API mvc_status mvc_matrix_get(const mvc_matrix* m, size_t r, size_t c, uint64_t* out);
/* value is reduced into the field */
MVC_API mvc_status mvc_matrix_set(const mvc_field* field, mvc_matrix* m, size_t r, size_t c,
                                  uint64_t value);
/* "rows cols" header followed by rows*cols integers, row-major */
MVC_API mvc_status mvc_matrix_parse(const mvc_field* field, const char* text, mvc_matrix** out);
MVC_API mvc_status mvc_matrix_format(const mvc_matrix* m, char** out);
MVC_API mvc_status mvc_matrix_load(const mvc_field* field, const char* path, mvc_matrix** out);
MVC_API mvc_status mvc_matrix_save(const mvc_matrix* m, const char* path);
MVC_API mvc_status mvc_matrix_multiply(const mvc_field* field, const mvc_matrix* a,
                                       const mvc_matrix* b, mvc_matrix** out);
/* 1 if equal, 0 otherwise */
MVC_API int mvc_matrix_equal(const mvc_matrix* a, const mvc_matrix* b);

/* ---- partitioned chains ---- */

/* dims and parts both have m + 1 entries. */
MVC_API mvc_status mvc_chain_random(const mvc_field* field, const size_t* dims,
                                    const size_t* parts, size_t count, uint64_t seed,
                                    mvc_chain** out);
/* m matrices, m + 1 split counts */
MVC_API mvc_status mvc_chain_from_matrices(const mvc_field* field,
                                           const mvc_matrix* const* matrices, size_t m,
                                           const size_t* parts, mvc_chain** out);
MVC_API void mvc_chain_destroy(mvc_chain* chain);
MVC_API size_t mvc_chain_length(const mvc_chain* chain);
MVC_API mvc_status mvc_chain_matrix(const mvc_chain* chain, size_t i, mvc_matrix** out);
MVC_API mvc_status mvc_chain_oracle_product(const mvc_chain* chain, mvc_matrix** out);

/* ---- coding ---- */

/* Serialized coded task for the given evaluation point (m coordinates for
 * MV1, m + 1 for MV2). */
MVC_API mvc_status mvc_encode_task(const mvc_chain* chain, mvc_scheme scheme,
                                   const uint64_t* coords, size_t ncoords, char** out);
/* Parses a serialized task and multiplies its coded blocks. */
MVC_API mvc_status mvc_worker_compute(const mvc_field* field, const char* task_text,
                                      mvc_matrix** out);

typedef struct mvc_roundtrip_report {
  uint64_t recovery_threshold;
  uint64_t evaluations;
  uint64_t partition_level;
  int exact;
} mvc_roundtrip_report;

/* Encode on a seeded grid, compute, interpolate, decode, compare with the
 * uncoded product. decoded may be NULL. */
MVC_API mvc_status mvc_roundtrip(const mvc_chain* chain, mvc_scheme scheme, uint64_t grid_seed,
                                 mvc_axis_convention convention, mvc_roundtrip_report* report,
                                 mvc_matrix** decoded);

/* Evaluates the product polynomial at npoints points (row-major coordinate
 * array) and decodes from them with the rank-checked general decoder.
 * MVC_ERR_SINGULAR_SYSTEM if the points do not determine the polynomial. */
MVC_API mvc_status mvc_decode_points(const mvc_chain* chain, mvc_scheme scheme,
                                     const uint64_t* coords, size_t npoints,
                                     mvc_matrix** decoded);

/* ---- closed-form analysis ---- */

MVC_API mvc_status mvc_recovery_threshold(mvc_scheme scheme, const size_t* parts, size_t count,
                                          uint64_t* out);
/* key=value lines with exact rationals; fractions as "a/b" strings, only
 * read for dedicated memory. */
MVC_API mvc_status mvc_metrics_text(mvc_scheme scheme, mvc_memory memory, const size_t* parts,
                                    size_t count, uint64_t workers,
                                    const char* const* fractions, size_t nfractions,
                                    char** out);

typedef struct mvc_figure_ranges {
  const size_t* m_values; /* NULL: {5, 10} */
  size_t n_m_values;
  const size_t* p_values; /* NULL: figure default */
  size_t n_p_values;
  const uint64_t* worker_values; /* NULL: figure default */
  size_t n_worker_values;
  uint64_t fixed_workers; /* 0: 5 */
  size_t fixed_parts;     /* 0: 5 */
} mvc_figure_ranges;

/* CSV with header scheme,memory,m,p,N,metric,value_percent. ranges may be
 * NULL for all defaults. */
MVC_API mvc_status mvc_figure_csv(mvc_figure which, const mvc_figure_ranges* ranges, char** out);

/* ---- storage plans ---- */

MVC_API mvc_status mvc_plan_shared(const mvc_field* field, mvc_scheme scheme, const size_t* parts,
                                   size_t count, size_t workers, uint64_t seed, mvc_plan** out);
MVC_API mvc_status mvc_plan_dedicated(const mvc_field* field, mvc_scheme scheme,
                                      const size_t* parts, size_t count, size_t workers,
                                      const char* const* fractions, size_t nfractions,
                                      uint64_t seed, mvc_plan** out);
MVC_API void mvc_plan_destroy(mvc_plan* plan);
MVC_API mvc_status mvc_plan_report(const mvc_plan* plan, char** out);
MVC_API uint64_t mvc_plan_recovery_threshold(const mvc_plan* plan);
MVC_API uint64_t mvc_plan_total_tasks(const mvc_plan* plan);
/* Writes up to capacity per-matrix block counts; *count receives m. */
MVC_API mvc_status mvc_plan_storage_threshold(const mvc_plan* plan, uint64_t* out,
                                              size_t capacity, size_t* count);

/* ---- straggler simulation ---- */

typedef struct mvc_latency {
  mvc_latency_family family;
  double shift;     /* shifted exponential */
  double rate;      /* shifted exponential */
  double task_time; /* deterministic */
} mvc_latency;

typedef struct mvc_sim_outcome {
  double recovery_time;
  uint64_t tasks_used;
  uint64_t tasks_total;
  uint64_t tasks_wasted;
  uint64_t extra_for_decodability;
  int matches_oracle;
} mvc_sim_outcome;

MVC_API mvc_status mvc_simulate(const mvc_plan* plan, const mvc_chain* chain,
                                const mvc_latency* latency, uint64_t seed, mvc_sim_outcome* out);

/* Runs every plan under every seed. runs_csv / summary_csv may be NULL.
 * never_decodable receives the number of runs that exhausted their tasks
 * without becoming decodable and oracle_mismatches the number of decoded
 * runs that differ from the uncoded product; neither fails the call. */
MVC_API mvc_status mvc_sweep(const mvc_plan* const* plans, size_t nplans, const mvc_chain* chain,
                             const mvc_latency* latency, const uint64_t* seeds, size_t nseeds,
                             int include_uv_reference, char** runs_csv, char** summary_csv,
                             size_t* never_decodable, size_t* oracle_mismatches);

#ifdef __cplusplus
}
#endif

#endif /* MVCODES_MVCODES_H_ */
