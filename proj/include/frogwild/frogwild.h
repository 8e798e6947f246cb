/*
 * Copyright 2026 The FrogWild Simulator Authors
 *
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

/*
 * C interface to the FrogWild simulator.
 *
 * All objects are opaque handles created by fw_*_create / fw_*_load / run
 * functions and released with the matching fw_*_free. Every fallible call
 * returns an fw_status; on failure fw_last_error() describes the problem
 * (the message is thread-local and valid until the next failing call on the
 * same thread). Output arrays are caller-allocated; their required length is
 * stated per function.
 */

#ifndef FROGWILD_H
#define FROGWILD_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define FW_API __declspec(dllexport)
#else
#  define FW_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fw_status {
  FW_OK = 0,
  FW_ERR_INVALID_ARGUMENT = 1,
  FW_ERR_OUT_OF_RANGE = 2,
  FW_ERR_IO = 3,
  FW_ERR_PARSE = 4,
  FW_ERR_EMPTY_GRAPH = 5,
  FW_ERR_NOT_CONVERGED = 6,
  FW_ERR_TOO_LARGE = 7,
  FW_ERR_INTERNAL = 8
} fw_status;

typedef struct fw_graph fw_graph;
typedef struct fw_partition fw_partition;
typedef struct fw_frog_run fw_frog_run;
typedef struct fw_verify_report fw_verify_report;

FW_API const char* fw_version(void);
FW_API const char* fw_last_error(void);
FW_API const char* fw_status_name(fw_status status);

/* ---- graphs ------------------------------------------------------------ */

typedef enum fw_edge_format { FW_FORMAT_PLAIN = 0, FW_FORMAT_SNAP = 1 } fw_edge_format;

typedef struct fw_graph_info {
  uint32_t vertices;
  uint64_t edges;
  uint64_t dangling;
  uint64_t duplicates_collapsed;
  uint64_t self_loops;
} fw_graph_info;

FW_API fw_status fw_graph_load(const char* path, fw_edge_format format, fw_graph** out);
/* Edges over dense ids 0..n-1; duplicates are collapsed. */
FW_API fw_status fw_graph_from_edges(uint32_t n, const uint32_t* src, const uint32_t* dst,
                                     size_t count, fw_graph** out);
/* Built-in graphs: two-cycle, point, five, complete20, pa200, pa<N>. */
FW_API fw_status fw_graph_suite(const char* name, fw_graph** out);
/* Keeps each edge with probability keep; vertex set unchanged. */
FW_API fw_status fw_graph_sparsify(const fw_graph* g, double keep, uint64_t seed, fw_graph** out);
FW_API fw_status fw_graph_write_edge_list(const fw_graph* g, const char* path);
FW_API fw_status fw_graph_get_info(const fw_graph* g, fw_graph_info* out);
/* out: vertices entries; original ids from the input file. */
FW_API fw_status fw_graph_labels(const fw_graph* g, uint64_t* out);
FW_API void fw_graph_free(fw_graph* g);

/* ---- exact PageRank ---------------------------------------------------- */

typedef struct fw_power_info {
  uint32_t iterations;
  double residual;
  int converged;
} fw_power_info;

/* Power iteration from the uniform vector. scores: vertices entries. Fills
 * scores and info even when returning FW_ERR_NOT_CONVERGED. */
FW_API fw_status fw_pagerank_power(const fw_graph* g, double p_t, double tol, uint32_t max_iters,
                                   double* scores, fw_power_info* info);
/* Dense direct solve, vertices <= 2000. */
FW_API fw_status fw_pagerank_dense(const fw_graph* g, double p_t, double* scores);
/* out: k entries, ties by ascending id. */
FW_API fw_status fw_top_k(const double* scores, size_t n, size_t k, uint32_t* out);

/* ---- partitioning and traffic ----------------------------------------- */

typedef enum fw_partition_strategy {
  FW_PARTITION_RANDOM = 0,
  FW_PARTITION_GREEDY = 1
} fw_partition_strategy;

typedef struct fw_partition_info {
  uint32_t machines;
  double replication_factor;
  uint64_t mirror_slots;
  uint64_t cut_edges; /* edges not on their target's master machine */
  int degenerate;     /* more machines than edges */
} fw_partition_info;

FW_API fw_status fw_partition_create(const fw_graph* g, uint32_t machines,
                                     fw_partition_strategy strategy, uint64_t seed,
                                     fw_partition** out);
FW_API fw_status fw_partition_get_info(const fw_partition* p, fw_partition_info* out);
FW_API void fw_partition_free(fw_partition* p);
/* p_s times the mirror count summed over `active` vertices. */
FW_API fw_status fw_sync_messages_expectation(const fw_partition* p, double p_s,
                                              const uint32_t* active, size_t count, double* out);

typedef struct fw_byte_costs {
  uint64_t sync_bytes;
  uint64_t frog_bytes;
} fw_byte_costs;

typedef struct fw_traffic_row {
  uint32_t superstep;
  uint64_t sync_messages;
  uint64_t frog_messages;
  uint64_t bytes;
} fw_traffic_row;

/* Traffic of `iterations` power-iteration supersteps: every vertex
 * synchronizes all mirrors and messages every out-neighbor (one message per
 * cut edge). rows: iterations entries. */
FW_API fw_status fw_baseline_traffic(const fw_graph* g, const fw_partition* p,
                                     uint32_t iterations, fw_byte_costs costs,
                                     fw_traffic_row* rows);
/* Writes "superstep,sync_messages,frog_messages,bytes". */
FW_API fw_status fw_write_traffic_csv(const char* path, const fw_traffic_row* rows, size_t count);
/* Writes "vertex,score" using the graph's labels, 17 significant digits. */
FW_API fw_status fw_write_scores_csv(const char* path, const fw_graph* g, const double* scores);

/* ---- FrogWild ----------------------------------------------------------- */

typedef enum fw_scatter { FW_SCATTER_CEIL = 0, FW_SCATTER_BINOMIAL = 1 } fw_scatter;
typedef enum fw_erasure { FW_ERASURE_INDEPENDENT = 0, FW_ERASURE_AT_LEAST_ONE = 1 } fw_erasure;

typedef struct fw_frog_config {
  uint64_t frogs;
  double p_t;
  uint32_t t_max;
  double p_s;
  fw_scatter scatter;
  fw_erasure erasure;
  uint64_t seed;
  uint32_t threads;
  fw_byte_costs costs;
} fw_frog_config;

FW_API void fw_frog_config_default(fw_frog_config* out);
FW_API fw_status fw_frogwild_run(const fw_graph* g, const fw_partition* p,
                                 const fw_frog_config* config, fw_frog_run** out);
FW_API size_t fw_frog_run_vertices(const fw_frog_run* run);
FW_API size_t fw_frog_run_supersteps(const fw_frog_run* run);
FW_API uint64_t fw_frog_run_stopped_total(const fw_frog_run* run);
/* 1 when every barrier accounted for exactly the initial frog count. */
FW_API int fw_frog_run_conserved(const fw_frog_run* run);
/* out: vertices entries. */
FW_API fw_status fw_frog_run_counters(const fw_frog_run* run, uint64_t* out);
/* rows: supersteps entries. */
FW_API fw_status fw_frog_run_traffic(const fw_frog_run* run, fw_traffic_row* rows);
FW_API fw_status fw_frog_run_totals(const fw_frog_run* run, fw_traffic_row* out);
FW_API void fw_frog_run_free(fw_frog_run* run);

/* ---- metrics ------------------------------------------------------------ */

typedef struct fw_accuracy_report {
  size_t k;
  double mass_captured;
  double normalized_mass;
  double exact_identification;
  double epsilon_bound;
  int bound_satisfied;
} fw_accuracy_report;

typedef struct fw_bound_inputs {
  double p_t;
  uint32_t t;
  size_t k;
  double delta;
  uint64_t frogs;
  double p_s;
  double p_meet;
} fw_bound_inputs;

/* out: n entries, counters[i] / frogs. Counters must sum to frogs. */
FW_API fw_status fw_estimator(const uint64_t* counters, size_t n, uint64_t frogs, double* out);
FW_API fw_status fw_accuracy(const double* estimate, const double* pi, size_t n, size_t k,
                             double epsilon, fw_accuracy_report* out);
FW_API fw_status fw_epsilon_bound(const fw_bound_inputs* in, double* out);
FW_API fw_status fw_intersection_bound(size_t n, uint32_t t, double pi_max, double p_t,
                                       double* out);
FW_API fw_status fw_intersection_mc(const fw_graph* g, double p_t, uint32_t t, uint64_t trials,
                                    uint64_t seed, double* estimate, double* lower,
                                    double* upper);
FW_API fw_status fw_sample_size_hint(size_t k, double mu_k, double p_t, uint32_t* steps,
                                     uint64_t* frogs);

/* ---- verification suite ------------------------------------------------- */

typedef enum fw_suite { FW_SUITE_FAST = 0, FW_SUITE_FULL = 1 } fw_suite;

/* Fault injection for checking that the suite catches a broken estimator. */
#define FW_VERIFY_CORRUPT_ESTIMATOR 1u

typedef struct fw_property_result {
  const char* module;
  const char* property;
  double statistic;
  const char* comparator;
  double threshold;
  int passed;
  const char* detail;
} fw_property_result;

FW_API fw_status fw_verify_run(fw_suite suite, uint64_t seed, uint32_t flags,
                               fw_verify_report** out);
FW_API size_t fw_verify_count(const fw_verify_report* report);
/* Strings stay valid until the report is freed. */
FW_API fw_status fw_verify_get(const fw_verify_report* report, size_t index,
                               fw_property_result* out);
FW_API int fw_verify_all_passed(const fw_verify_report* report);
FW_API void fw_verify_free(fw_verify_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FROGWILD_H */
