/* Copyright 2026 The Tango Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TANGO_TANGO_H_
#define TANGO_TANGO_H_

/* C interface to libtango. Every object is an opaque handle; every call
 * that can fail returns a tango_status and leaves a message retrievable with
 * tango_last_error() on the calling thread. */

#include <stddef.h>
#include <stdint.h>

#if defined(TANGO_BUILDING_LIBRARY)
#define TANGO_API __attribute__((visibility("default")))
#else
#define TANGO_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tango_status {
  TANGO_OK = 0,
  TANGO_ERR_INVALID_ARGUMENT = 1,
  TANGO_ERR_INVALID_CONFIG = 2,
  TANGO_ERR_OUT_OF_RANGE = 3,
  TANGO_ERR_CAPACITY = 4,
  TANGO_ERR_OUT_OF_MEMORY = 5,
  TANGO_ERR_PARSE = 6,
  TANGO_ERR_IO = 7,
  TANGO_ERR_INTERNAL = 8
} tango_status;

typedef enum tango_format {
  TANGO_FORMAT_TANGO = 0,
  TANGO_FORMAT_ADLIST_SHARED = 1,
  TANGO_FORMAT_ADLIST_CHUNKED = 2
} tango_format;

typedef enum tango_vertex_kind {
  TANGO_KIND_TYPE1 = 1, /* edges inline in the vertex record */
  TANGO_KIND_TYPE2 = 2, /* edge array */
  TANGO_KIND_TYPE3 = 3  /* edge array + hash index */
} tango_vertex_kind;

enum {
  TANGO_ALGO_BFS = 1,
  TANGO_ALGO_PR = 2,
  TANGO_ALGO_SSSP = 4,
  TANGO_ALGO_CC = 8,
  TANGO_ALGO_ALL = 15
};

typedef enum tango_report_format { TANGO_REPORT_CSV = 0, TANGO_REPORT_TSV = 1 } tango_report_format;

typedef enum tango_shape { TANGO_SHAPE_SHORT_TAILED = 0, TANGO_SHAPE_HEAVY_TAILED = 1 } tango_shape;

typedef enum tango_phase { TANGO_PHASE_INSERT = 0, TANGO_PHASE_DELETE = 1 } tango_phase;

typedef struct tango_config tango_config;
typedef struct tango_graph tango_graph;
typedef struct tango_edge_list tango_edge_list;
typedef struct tango_report tango_report;
typedef struct tango_sweep tango_sweep;

/* Message for the last failed call on this thread ("" if none). */
TANGO_API const char* tango_last_error(void);
TANGO_API const char* tango_status_string(tango_status status);

/* ---- core helpers ---- */
TANGO_API tango_status tango_compute_th0(uint64_t cache_line_bytes, uint64_t edge_bytes,
                                         uint64_t degree_bytes, uint64_t* out);
TANGO_API uint64_t tango_th1_rule_of_thumb(uint64_t edges_per_cache_line);
TANGO_API uint64_t tango_partition_of(uint64_t v, uint64_t num_threads, uint64_t partition_size);

/* ---- configuration ----
 * Keys: cache_line_bytes, weighted, directed, th1, partition_size,
 * hash_constant, block_bytes. */
TANGO_API tango_status tango_config_create(tango_config** out);
TANGO_API void tango_config_destroy(tango_config* cfg);
TANGO_API tango_status tango_config_set(tango_config* cfg, const char* key, const char* value);
TANGO_API tango_status tango_config_load(tango_config* cfg, const char* path);
TANGO_API tango_status tango_config_get_u64(const tango_config* cfg, const char* key, uint64_t* out);
TANGO_API tango_status tango_config_validate(const tango_config* cfg);

/* ---- graph stores ----
 * Weighted/directed come from the config. num_owners > 1 only matters for
 * the threaded harness; handles here are used single-threaded. */
TANGO_API tango_status tango_graph_create(const tango_config* cfg, tango_format format,
                                          uint64_t num_vertices, tango_graph** out);
TANGO_API void tango_graph_destroy(tango_graph* g);
/* *inserted = 1 for a new edge, 0 when an existing edge's property was updated. */
TANGO_API tango_status tango_graph_insert_edge(tango_graph* g, uint64_t src, uint64_t dst,
                                               uint64_t prop, int* inserted);
/* *deleted = 1 if the edge existed. */
TANGO_API tango_status tango_graph_delete_edge(tango_graph* g, uint64_t src, uint64_t dst,
                                               int* deleted);
TANGO_API tango_status tango_graph_degree(const tango_graph* g, uint64_t v, uint64_t* out);
/* Only for TANGO_FORMAT_TANGO graphs. */
TANGO_API tango_status tango_graph_vertex_kind(const tango_graph* g, uint64_t v,
                                               tango_vertex_kind* out);
/* Copies up to cap out-neighbours (and props, if props != NULL); *count gets
 * the full degree, so a short buffer can be detected. */
TANGO_API tango_status tango_graph_neighbors(const tango_graph* g, uint64_t v, uint64_t* dsts,
                                             uint64_t* props, size_t cap, size_t* count);
TANGO_API tango_status tango_graph_memory_bytes(const tango_graph* g, uint64_t* out);
TANGO_API uint64_t tango_graph_num_vertices(const tango_graph* g);

/* ---- edge lists ---- */
TANGO_API tango_status tango_edge_list_load_snap(const char* path, int directed,
                                                 tango_edge_list** out);
TANGO_API tango_status tango_edge_list_generate(tango_shape shape, uint64_t num_vertices,
                                                uint64_t num_edges, uint64_t seed, int weighted,
                                                int directed, tango_edge_list** out);
TANGO_API void tango_edge_list_shuffle(tango_edge_list* list, uint64_t seed);
TANGO_API uint64_t tango_edge_list_size(const tango_edge_list* list);
TANGO_API uint64_t tango_edge_list_num_vertices(const tango_edge_list* list);
TANGO_API int tango_edge_list_weighted(const tango_edge_list* list);
TANGO_API tango_status tango_edge_list_get(const tango_edge_list* list, uint64_t index,
                                           uint64_t* src, uint64_t* dst, uint64_t* prop);
/* Input id of dense vertex v (identity for generated lists). */
TANGO_API tango_status tango_edge_list_original_id(const tango_edge_list* list, uint64_t v,
                                                   uint64_t* out);
TANGO_API tango_status tango_edge_list_max_batch_degree(const tango_edge_list* list,
                                                        uint64_t batch_size, uint64_t* out);
TANGO_API void tango_edge_list_destroy(tango_edge_list* list);

/* ---- experiments ---- */
typedef struct tango_experiment_options {
  tango_format format;
  unsigned algorithms; /* TANGO_ALGO_* bitmask */
  uint64_t batch_size;
  unsigned threads;
  uint64_t source;
} tango_experiment_options;

typedef struct tango_batch_row {
  uint64_t batch;
  tango_phase phase;
  uint64_t edges;
  double update_seconds;
  double update_eps;
  double analytics_seconds;
  double analytics_eps;
  double bfs_seconds;
  double pr_seconds;
  double sssp_seconds;
  double cc_seconds;
  uint64_t live_edges;
  uint64_t memory_bytes;
  double bytes_per_edge;
  uint64_t probe_samples;
  double probe_mean;
  double probe_le8_fraction;
} tango_batch_row;

typedef struct tango_summary {
  uint64_t insert_batches;
  uint64_t delete_batches;
  double geomean_insert_eps;
  double geomean_delete_eps;
  double geomean_analytics_eps;
  double mean_bytes_per_edge;
  uint64_t peak_memory_bytes;
  double total_update_seconds;
  double total_analytics_seconds;
  uint64_t final_live_edges;
  uint64_t final_stored_edges;
} tango_summary;

/* Defaults: tango format, all algorithms, batch 100000, 1 thread, source 0. */
TANGO_API void tango_experiment_options_init(tango_experiment_options* opts);
/* cfg may be NULL for defaults. */
TANGO_API tango_status tango_run_experiment(const tango_config* cfg, const tango_edge_list* list,
                                            const tango_experiment_options* opts,
                                            tango_report** out);
TANGO_API tango_status tango_report_summary(const tango_report* r, tango_summary* out);
TANGO_API uint64_t tango_report_batch_count(const tango_report* r);
TANGO_API tango_status tango_report_batch(const tango_report* r, uint64_t index,
                                          tango_batch_row* out);
TANGO_API tango_status tango_report_write(const tango_report* r, const char* path,
                                          tango_report_format fmt);
TANGO_API void tango_report_destroy(tango_report* r);

/* Runs the tango format once per th1 value (NULL/0 = 8,16,...,512). */
TANGO_API tango_status tango_sweep_th1(const tango_config* cfg, const tango_edge_list* list,
                                       const tango_experiment_options* opts,
                                       const uint64_t* th1_values, size_t count,
                                       tango_sweep** out);
TANGO_API size_t tango_sweep_size(const tango_sweep* s);
TANGO_API tango_status tango_sweep_point(const tango_sweep* s, size_t index, uint64_t* th1,
                                         tango_summary* out);
TANGO_API tango_status tango_sweep_write(const tango_sweep* s, const char* path,
                                         tango_report_format fmt);
TANGO_API void tango_sweep_destroy(tango_sweep* s);

#ifdef __cplusplus
}
#endif

#endif /* TANGO_TANGO_H_ */
