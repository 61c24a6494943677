/* Copyright 2026 The rankprice Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the rankprice solver.
 *
 * Every fallible call returns an rp_status. On failure a description is
 * available from rp_last_error() on the same thread until the next failing
 * call. Handles are opaque and released with the matching *_free function;
 * passing NULL to a free function is a no-op.
 *
 * Prices cross the boundary as money values (int64), products and customers
 * as 0-based indices. Array outputs take an explicit element count and fail
 * with RP_ERR_LENGTH_MISMATCH when it is not the required one.
 */

#ifndef RANKPRICE_RANKPRICE_H_
#define RANKPRICE_RANKPRICE_H_

#include <stddef.h>
#include <stdint.h>

#if defined(RANKPRICE_BUILDING_LIBRARY)
#define RANKPRICE_API __attribute__((visibility("default")))
#else
#define RANKPRICE_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rp_status {
  RP_OK = 0,
  RP_ERR_NON_POSITIVE_BUDGET = 1,
  RP_ERR_TIED_PREFERENCES = 2,
  RP_ERR_EMPTY_PREFERENCE_ROW = 3,
  RP_ERR_DIMENSION_MISMATCH = 4,
  RP_ERR_INVALID_PREFERENCE = 5,
  RP_ERR_LENGTH_MISMATCH = 6,
  RP_ERR_SEARCH_SPACE_TOO_LARGE = 7,
  RP_ERR_INVALID_RANGE = 8,
  RP_ERR_INSTANCE_READ = 9,
  RP_ERR_OUTPUT_WRITE = 10,
  RP_ERR_EMPTY_INPUT = 11,
  RP_ERR_INVALID_ARGUMENT = 12,
  RP_ERR_PARSE = 13,
  RP_ERR_INTERNAL = 99
} rp_status;

typedef struct rp_instance rp_instance;
typedef struct rp_exact_result rp_exact_result;
typedef struct rp_config rp_config;
typedef struct rp_report rp_report;

RANKPRICE_API const char* rp_last_error(void);
RANKPRICE_API const char* rp_status_string(rp_status status);

/* Strings returned through char** outputs. */
RANKPRICE_API void rp_string_free(char* text);

/* ---- Instances ---- */

RANKPRICE_API rp_status rp_instance_load(const char* path, rp_instance** out);
RANKPRICE_API rp_status rp_instance_from_json(const char* text,
                                              rp_instance** out);
/* scores is row-major num_customers x num_products; 0 marks a product the
 * customer will not buy, larger is more preferred. name may be NULL. */
RANKPRICE_API rp_status rp_instance_create(const char* name, int num_products,
                                           int num_customers,
                                           const int64_t* budgets,
                                           const int32_t* scores,
                                           rp_instance** out);
RANKPRICE_API rp_status rp_instance_generate(int num_products,
                                             int num_customers,
                                             int64_t budget_lo,
                                             int64_t budget_hi,
                                             double availability,
                                             uint64_t seed, rp_instance** out);
RANKPRICE_API rp_status rp_instance_save(const rp_instance* instance,
                                         const char* path);
RANKPRICE_API rp_status rp_instance_to_json(const rp_instance* instance,
                                            char** out);
RANKPRICE_API void rp_instance_free(rp_instance* instance);

RANKPRICE_API const char* rp_instance_name(const rp_instance* instance);
RANKPRICE_API int rp_instance_num_products(const rp_instance* instance);
RANKPRICE_API int rp_instance_num_customers(const rp_instance* instance);
RANKPRICE_API int rp_instance_grid_size(const rp_instance* instance);
/* Sorted distinct budgets; n must equal rp_instance_grid_size. */
RANKPRICE_API rp_status rp_instance_grid(const rp_instance* instance,
                                         int64_t* values, size_t n);

/* ---- Evaluation ---- */

/* Any integer prices, n == num_products. chosen may be NULL; otherwise it
 * receives num_customers product indices, -1 for no purchase. */
RANKPRICE_API rp_status rp_evaluate(const rp_instance* instance,
                                    const int64_t* prices, size_t n,
                                    int64_t* revenue, int32_t* chosen,
                                    size_t num_chosen);

/* Applies a pipeline such as "sfrc" to a grid price vector in place. */
RANKPRICE_API rp_status rp_local_search(const rp_instance* instance,
                                        const char* pipeline, uint64_t seed,
                                        int64_t* prices, size_t n,
                                        int64_t* revenue);

/* ---- Exact oracle ---- */

/* cap 0 selects the default of 10^7 vectors. */
RANKPRICE_API rp_status rp_brute_force(const rp_instance* instance,
                                       uint64_t cap, int workers,
                                       rp_exact_result** out);
RANKPRICE_API int64_t rp_exact_optimum(const rp_exact_result* result);
RANKPRICE_API uint64_t rp_exact_evaluated(const rp_exact_result* result);
RANKPRICE_API size_t rp_exact_num_optima(const rp_exact_result* result);
RANKPRICE_API rp_status rp_exact_optimum_prices(const rp_exact_result* result,
                                                size_t index, int64_t* prices,
                                                size_t n);
RANKPRICE_API void rp_exact_result_free(rp_exact_result* result);

RANKPRICE_API rp_status rp_export_lp(const rp_instance* instance,
                                     const char* path);
RANKPRICE_API rp_status rp_export_lp_string(const rp_instance* instance,
                                            char** out);

/* ---- Experiments ---- */

/* method: "naive", "vns" or "genetic". */
RANKPRICE_API rp_status rp_config_create(const char* method, rp_config** out);
RANKPRICE_API rp_status rp_config_from_json(const char* text, rp_config** out);
RANKPRICE_API rp_status rp_config_load(const char* path, rp_config** out);
/* Keys: instance_path, method, init, pipeline, out_dir. */
RANKPRICE_API rp_status rp_config_set_string(rp_config* config,
                                             const char* key,
                                             const char* value);
/* Keys: l0, q, t, max_points, iterations, runs, base_seed, workers,
 * reference, vns_reset_radius, parents_with_replacement, dedup. */
RANKPRICE_API rp_status rp_config_set_int(rp_config* config, const char* key,
                                          int64_t value);
/* Keys: time_limit (seconds). */
RANKPRICE_API rp_status rp_config_set_double(rp_config* config,
                                             const char* key, double value);
RANKPRICE_API void rp_config_free(rp_config* config);

typedef struct rp_run_info {
  int32_t run_id;
  uint64_t seed;
  int64_t best_value;
  int64_t evals;
  double elapsed_ms;
  int64_t ls_evaluations;
  int64_t fill_reverts;
  int64_t fill_poaching;
  int64_t reassign_reverts;
  int64_t conditional_reverts;
} rp_run_info;

typedef struct rp_trace_point {
  int64_t evals;
  double elapsed_ms;
  int64_t best_value;
} rp_trace_point;

typedef struct rp_checkpoint {
  int32_t checkpoint;
  int64_t evals;
  double elapsed_ms;
  int64_t p5;
  int64_t p50;
  int64_t p95;
} rp_checkpoint;

typedef struct rp_summary {
  size_t count;
  int64_t min;
  int64_t q1;
  int64_t median;
  int64_t q3;
  int64_t max;
  double mean;
  double variance;
  int has_reference;
  int64_t reference;
  double hit_rate;
  double min_ratio;
  double max_ratio;
} rp_summary;

/* instance may be NULL, in which case the config's instance_path is loaded.
 * CSV files are written when out_dir is set. */
RANKPRICE_API rp_status rp_run_experiment(const rp_config* config,
                                          const rp_instance* instance,
                                          rp_report** out);
RANKPRICE_API size_t rp_report_num_runs(const rp_report* report);
RANKPRICE_API rp_status rp_report_run(const rp_report* report, size_t run,
                                      rp_run_info* out);
RANKPRICE_API rp_status rp_report_run_prices(const rp_report* report,
                                             size_t run, int64_t* prices,
                                             size_t n);
RANKPRICE_API size_t rp_report_trace_length(const rp_report* report,
                                            size_t run);
RANKPRICE_API rp_status rp_report_trace_point(const rp_report* report,
                                              size_t run, size_t index,
                                              rp_trace_point* out);
RANKPRICE_API size_t rp_report_num_checkpoints(const rp_report* report);
RANKPRICE_API rp_status rp_report_checkpoint(const rp_report* report,
                                             size_t index, rp_checkpoint* out);
/* Uses the config's reference value when one was set. */
RANKPRICE_API rp_status rp_report_summary(const rp_report* report,
                                          rp_summary* out);
RANKPRICE_API void rp_report_free(rp_report* report);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif /* RANKPRICE_RANKPRICE_H_ */
