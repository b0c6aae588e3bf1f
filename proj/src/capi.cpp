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

#include "tango/tango.h"

#include <algorithm>
#include <new>
#include <string>
#include <variant>

#include "tango/baseline.hpp"
#include "tango/bench.hpp"
#include "tango/store.hpp"

struct tango_config {
  tango::Config config;
};

struct tango_graph {
  std::variant<tango::GraphStore, tango::WeightedGraphStore, tango::AdjListStore<tango::PlainEdge>,
               tango::AdjListStore<tango::WeightedEdge>>
      store;
};

struct tango_edge_list {
  tango::bench::EdgeList list;
};

struct tango_report {
  tango::bench::ExperimentResult result;
};

struct tango_sweep {
  std::vector<tango::bench::SweepPoint> points;
};

namespace {

thread_local std::string g_last_error;

tango_status to_status(tango::Errc c) {
  using tango::Errc;
  switch (c) {
    case Errc::invalid_config: return TANGO_ERR_INVALID_CONFIG;
    case Errc::invalid_argument: return TANGO_ERR_INVALID_ARGUMENT;
    case Errc::vertex_out_of_range: return TANGO_ERR_OUT_OF_RANGE;
    case Errc::capacity_exceeded: return TANGO_ERR_CAPACITY;
    case Errc::out_of_memory: return TANGO_ERR_OUT_OF_MEMORY;
    case Errc::parse_error: return TANGO_ERR_PARSE;
    case Errc::io_error: return TANGO_ERR_IO;
  }
  return TANGO_ERR_INTERNAL;
}

tango_status fail(tango_status s, std::string msg) {
  g_last_error = std::move(msg);
  return s;
}

template <class Fn>
tango_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return TANGO_OK;
  } catch (const tango::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(TANGO_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(TANGO_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TANGO_ERR_INTERNAL, "unknown exception");
  }
}

#define TANGO_REQUIRE(cond, msg) \
  if (!(cond)) return fail(TANGO_ERR_INVALID_ARGUMENT, msg)

tango::bench::Format to_format(tango_format f) {
  switch (f) {
    case TANGO_FORMAT_TANGO: return tango::bench::Format::tango;
    case TANGO_FORMAT_ADLIST_SHARED: return tango::bench::Format::adlist_shared;
    case TANGO_FORMAT_ADLIST_CHUNKED: return tango::bench::Format::adlist_chunked;
  }
  throw tango::Error(tango::Errc::invalid_argument, "unknown format");
}

tango::bench::ReportFormat to_report_format(tango_report_format f) {
  switch (f) {
    case TANGO_REPORT_CSV: return tango::bench::ReportFormat::csv;
    case TANGO_REPORT_TSV: return tango::bench::ReportFormat::tsv;
  }
  throw tango::Error(tango::Errc::invalid_argument, "unknown report format");
}

void fill(tango_summary* out, const tango::bench::ExperimentSummary& s) {
  out->insert_batches = s.insert_batches;
  out->delete_batches = s.delete_batches;
  out->geomean_insert_eps = s.geomean_insert_eps;
  out->geomean_delete_eps = s.geomean_delete_eps;
  out->geomean_analytics_eps = s.geomean_analytics_eps;
  out->mean_bytes_per_edge = s.mean_bytes_per_edge;
  out->peak_memory_bytes = s.peak_memory_bytes;
  out->total_update_seconds = s.total_update_seconds;
  out->total_analytics_seconds = s.total_analytics_seconds;
  out->final_live_edges = s.final_live_edges;
  out->final_stored_edges = s.final_stored_edges;
}

tango::bench::ExperimentOptions to_options(const tango_config* cfg,
                                           const tango_experiment_options* opts) {
  tango::bench::ExperimentOptions o;
  if (cfg != nullptr) o.config = cfg->config;
  if (opts != nullptr) {
    o.format = to_format(opts->format);
    o.algorithms = opts->algorithms;
    o.batch_size = opts->batch_size;
    o.threads = opts->threads;
    o.source = opts->source;
  }
  return o;
}

}  // namespace

extern "C" {

const char* tango_last_error(void) { return g_last_error.c_str(); }

const char* tango_status_string(tango_status status) {
  switch (status) {
    case TANGO_OK: return "ok";
    case TANGO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TANGO_ERR_INVALID_CONFIG: return "invalid configuration";
    case TANGO_ERR_OUT_OF_RANGE: return "vertex out of range";
    case TANGO_ERR_CAPACITY: return "capacity exceeded";
    case TANGO_ERR_OUT_OF_MEMORY: return "out of memory";
    case TANGO_ERR_PARSE: return "parse error";
    case TANGO_ERR_IO: return "i/o error";
    case TANGO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

tango_status tango_compute_th0(uint64_t cache_line_bytes, uint64_t edge_bytes,
                               uint64_t degree_bytes, uint64_t* out) {
  TANGO_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = tango::compute_th0(cache_line_bytes, edge_bytes, degree_bytes); });
}

uint64_t tango_th1_rule_of_thumb(uint64_t edges_per_cache_line) {
  return tango::th1_rule_of_thumb(edges_per_cache_line);
}

uint64_t tango_partition_of(uint64_t v, uint64_t num_threads, uint64_t partition_size) {
  if (num_threads == 0 || partition_size == 0) return 0;
  return tango::partition_of(v, num_threads, partition_size);
}

tango_status tango_config_create(tango_config** out) {
  TANGO_REQUIRE(out != nullptr, "out is null");
  return guarded([&] { *out = new tango_config{}; });
}

void tango_config_destroy(tango_config* cfg) { delete cfg; }

tango_status tango_config_set(tango_config* cfg, const char* key, const char* value) {
  TANGO_REQUIRE(cfg != nullptr && key != nullptr && value != nullptr, "null argument");
  return guarded([&] { tango::apply_config_entry(cfg->config, key, value); });
}

tango_status tango_config_load(tango_config* cfg, const char* path) {
  TANGO_REQUIRE(cfg != nullptr && path != nullptr, "null argument");
  return guarded([&] { cfg->config = tango::load_config_file(path, cfg->config); });
}

tango_status tango_config_get_u64(const tango_config* cfg, const char* key, uint64_t* out) {
  TANGO_REQUIRE(cfg != nullptr && key != nullptr && out != nullptr, "null argument");
  const tango::Config& c = cfg->config;
  const std::string k = key;
  if (k == "cache_line_bytes") *out = c.cache_line_bytes;
  else if (k == "weighted") *out = c.weighted;
  else if (k == "directed") *out = c.directed;
  else if (k == "th1") *out = c.th1;
  else if (k == "partition_size") *out = c.partition_size;
  else if (k == "hash_constant") *out = c.hash_constant;
  else if (k == "block_bytes") *out = c.block_bytes;
  else return fail(TANGO_ERR_INVALID_CONFIG, "unknown config key '" + k + "'");
  return TANGO_OK;
}

tango_status tango_config_validate(const tango_config* cfg) {
  TANGO_REQUIRE(cfg != nullptr, "null config");
  return guarded([&] { cfg->config.validate(); });
}

tango_status tango_graph_create(const tango_config* cfg, tango_format format,
                                uint64_t num_vertices, tango_graph** out) {
  TANGO_REQUIRE(cfg != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    const tango::Config& c = cfg->config;
    c.validate();
    using tango::AdjListMode;
    switch (to_format(format)) {
      case tango::bench::Format::tango:
        *out = c.weighted ? new tango_graph{tango::WeightedGraphStore(c, num_vertices)}
                          : new tango_graph{tango::GraphStore(c, num_vertices)};
        return;
      case tango::bench::Format::adlist_shared:
      case tango::bench::Format::adlist_chunked: {
        const AdjListMode mode = format == TANGO_FORMAT_ADLIST_SHARED ? AdjListMode::shared : AdjListMode::chunked;
        *out = c.weighted
                   ? new tango_graph{tango::AdjListStore<tango::WeightedEdge>(c, num_vertices, mode)}
                   : new tango_graph{tango::AdjListStore<tango::PlainEdge>(c, num_vertices, mode)};
        return;
      }
    }
  });
}

void tango_graph_destroy(tango_graph* g) { delete g; }

tango_status tango_graph_insert_edge(tango_graph* g, uint64_t src, uint64_t dst, uint64_t prop,
                                     int* inserted) {
  TANGO_REQUIRE(g != nullptr, "null graph");
  return guarded([&] {
    const auto r = std::visit([&](auto& s) { return s.insert_edge(src, dst, prop); }, g->store);
    if (inserted != nullptr) *inserted = r == tango::UpdateResult::inserted;
  });
}

tango_status tango_graph_delete_edge(tango_graph* g, uint64_t src, uint64_t dst, int* deleted) {
  TANGO_REQUIRE(g != nullptr, "null graph");
  return guarded([&] {
    const auto r = std::visit([&](auto& s) { return s.delete_edge(src, dst); }, g->store);
    if (deleted != nullptr) *deleted = r == tango::DeleteResult::deleted;
  });
}

tango_status tango_graph_degree(const tango_graph* g, uint64_t v, uint64_t* out) {
  TANGO_REQUIRE(g != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = std::visit([&](const auto& s) { return s.degree(v); }, g->store); });
}

tango_status tango_graph_vertex_kind(const tango_graph* g, uint64_t v, tango_vertex_kind* out) {
  TANGO_REQUIRE(g != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    std::visit(
        [&](const auto& s) {
          if constexpr (requires { s.vertex_kind(v); }) {
            *out = static_cast<tango_vertex_kind>(s.vertex_kind(v));
          } else {
            throw tango::Error(tango::Errc::invalid_argument,
                               "vertex kinds exist only in the tango format");
          }
        },
        g->store);
  });
}

tango_status tango_graph_neighbors(const tango_graph* g, uint64_t v, uint64_t* dsts,
                                   uint64_t* props, size_t cap, size_t* count) {
  TANGO_REQUIRE(g != nullptr && count != nullptr, "null argument");
  TANGO_REQUIRE(cap == 0 || dsts != nullptr, "dsts is null");
  return guarded([&] {
    std::visit(
        [&](const auto& s) {
          if (v >= s.num_vertices()) {
            throw tango::Error(tango::Errc::vertex_out_of_range, "vertex out of range");
          }
          const auto nb = s.neighbors(v);
          *count = nb.size();
          const std::size_t n = std::min<std::size_t>(cap, nb.size());
          for (std::size_t i = 0; i < n; ++i) {
            dsts[i] = nb[i].dst;
            if (props != nullptr) props[i] = tango::edge_prop(nb[i]);
          }
        },
        g->store);
  });
}

tango_status tango_graph_memory_bytes(const tango_graph* g, uint64_t* out) {
  TANGO_REQUIRE(g != nullptr && out != nullptr, "null argument");
  *out = std::visit([](const auto& s) { return s.memory_bytes(); }, g->store);
  return TANGO_OK;
}

uint64_t tango_graph_num_vertices(const tango_graph* g) {
  return g == nullptr ? 0 : std::visit([](const auto& s) { return s.num_vertices(); }, g->store);
}

tango_status tango_edge_list_load_snap(const char* path, int directed, tango_edge_list** out) {
  TANGO_REQUIRE(path != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    auto* l = new tango_edge_list{tango::bench::load_snap(path)};
    l->list.directed = directed != 0;
    *out = l;
  });
}

tango_status tango_edge_list_generate(tango_shape shape, uint64_t num_vertices, uint64_t num_edges,
                                      uint64_t seed, int weighted, int directed,
                                      tango_edge_list** out) {
  TANGO_REQUIRE(out != nullptr, "out is null");
  TANGO_REQUIRE(shape == TANGO_SHAPE_SHORT_TAILED || shape == TANGO_SHAPE_HEAVY_TAILED, "unknown shape");
  return guarded([&] {
    const auto kind = shape == TANGO_SHAPE_SHORT_TAILED ? tango::bench::Synthetic::short_tailed
                                                        : tango::bench::Synthetic::heavy_tailed;
    *out = new tango_edge_list{
        tango::bench::gen_synthetic(kind, num_vertices, num_edges, seed, weighted != 0, directed != 0)};
  });
}

void tango_edge_list_shuffle(tango_edge_list* list, uint64_t seed) {
  if (list != nullptr) tango::bench::shuffle(list->list, seed);
}

uint64_t tango_edge_list_size(const tango_edge_list* list) {
  return list == nullptr ? 0 : list->list.edges.size();
}

uint64_t tango_edge_list_num_vertices(const tango_edge_list* list) {
  return list == nullptr ? 0 : list->list.num_vertices;
}

int tango_edge_list_weighted(const tango_edge_list* list) {
  return list != nullptr && list->list.weighted;
}

tango_status tango_edge_list_get(const tango_edge_list* list, uint64_t index, uint64_t* src,
                                 uint64_t* dst, uint64_t* prop) {
  TANGO_REQUIRE(list != nullptr, "null list");
  if (index >= list->list.edges.size()) return fail(TANGO_ERR_OUT_OF_RANGE, "edge index out of range");
  const auto& e = list->list.edges[index];
  if (src != nullptr) *src = e.src;
  if (dst != nullptr) *dst = e.dst;
  if (prop != nullptr) *prop = e.prop;
  return TANGO_OK;
}

tango_status tango_edge_list_original_id(const tango_edge_list* list, uint64_t v, uint64_t* out) {
  TANGO_REQUIRE(list != nullptr && out != nullptr, "null argument");
  if (v >= list->list.num_vertices) return fail(TANGO_ERR_OUT_OF_RANGE, "vertex out of range");
  *out = list->list.original_ids.empty() ? v : list->list.original_ids[v];
  return TANGO_OK;
}

tango_status tango_edge_list_max_batch_degree(const tango_edge_list* list, uint64_t batch_size,
                                              uint64_t* out) {
  TANGO_REQUIRE(list != nullptr && out != nullptr, "null argument");
  return guarded([&] { *out = tango::bench::max_batch_degree(list->list, batch_size); });
}

void tango_edge_list_destroy(tango_edge_list* list) { delete list; }

void tango_experiment_options_init(tango_experiment_options* opts) {
  if (opts == nullptr) return;
  opts->format = TANGO_FORMAT_TANGO;
  opts->algorithms = TANGO_ALGO_ALL;
  opts->batch_size = 100000;
  opts->threads = 1;
  opts->source = 0;
}

tango_status tango_run_experiment(const tango_config* cfg, const tango_edge_list* list,
                                  const tango_experiment_options* opts, tango_report** out) {
  TANGO_REQUIRE(list != nullptr && out != nullptr, "null argument");
  return guarded([&] {
    *out = new tango_report{tango::bench::run_experiment(list->list, to_options(cfg, opts))};
  });
}

tango_status tango_report_summary(const tango_report* r, tango_summary* out) {
  TANGO_REQUIRE(r != nullptr && out != nullptr, "null argument");
  fill(out, r->result.summary);
  return TANGO_OK;
}

uint64_t tango_report_batch_count(const tango_report* r) {
  return r == nullptr ? 0 : r->result.batches.size();
}

tango_status tango_report_batch(const tango_report* r, uint64_t index, tango_batch_row* out) {
  TANGO_REQUIRE(r != nullptr && out != nullptr, "null argument");
  if (index >= r->result.batches.size()) return fail(TANGO_ERR_OUT_OF_RANGE, "batch index out of range");
  const auto& b = r->result.batches[index];
  out->batch = b.batch;
  out->phase = b.phase == tango::bench::Phase::insert ? TANGO_PHASE_INSERT : TANGO_PHASE_DELETE;
  out->edges = b.edges;
  out->update_seconds = b.update_seconds;
  out->update_eps = b.update_eps;
  out->analytics_seconds = b.analytics_seconds;
  out->analytics_eps = b.analytics_eps;
  out->bfs_seconds = b.bfs_seconds;
  out->pr_seconds = b.pr_seconds;
  out->sssp_seconds = b.sssp_seconds;
  out->cc_seconds = b.cc_seconds;
  out->live_edges = b.live_edges;
  out->memory_bytes = b.memory_bytes;
  out->bytes_per_edge = b.bytes_per_edge;
  out->probe_samples = b.probe_samples;
  out->probe_mean = b.probe_mean;
  out->probe_le8_fraction = b.probe_le8_fraction;
  return TANGO_OK;
}

tango_status tango_report_write(const tango_report* r, const char* path, tango_report_format fmt) {
  TANGO_REQUIRE(r != nullptr && path != nullptr, "null argument");
  return guarded([&] { tango::bench::emit_report(path, r->result, to_report_format(fmt)); });
}

void tango_report_destroy(tango_report* r) { delete r; }

tango_status tango_sweep_th1(const tango_config* cfg, const tango_edge_list* list,
                             const tango_experiment_options* opts, const uint64_t* th1_values,
                             size_t count, tango_sweep** out) {
  TANGO_REQUIRE(list != nullptr && out != nullptr, "null argument");
  TANGO_REQUIRE(count == 0 || th1_values != nullptr, "th1_values is null");
  return guarded([&] {
    const auto o = to_options(cfg, opts);
    auto* s = new tango_sweep{};
    try {
      s->points = count == 0 ? tango::bench::sweep_th1(list->list, o)
                             : tango::bench::sweep_th1(list->list, o, {th1_values, count});
    } catch (...) {
      delete s;
      throw;
    }
    *out = s;
  });
}

size_t tango_sweep_size(const tango_sweep* s) { return s == nullptr ? 0 : s->points.size(); }

tango_status tango_sweep_point(const tango_sweep* s, size_t index, uint64_t* th1, tango_summary* out) {
  TANGO_REQUIRE(s != nullptr, "null sweep");
  if (index >= s->points.size()) return fail(TANGO_ERR_OUT_OF_RANGE, "sweep index out of range");
  if (th1 != nullptr) *th1 = s->points[index].th1;
  if (out != nullptr) fill(out, s->points[index].summary);
  return TANGO_OK;
}

tango_status tango_sweep_write(const tango_sweep* s, const char* path, tango_report_format fmt) {
  TANGO_REQUIRE(s != nullptr && path != nullptr, "null argument");
  return guarded([&] { tango::bench::emit_sweep(path, s->points, to_report_format(fmt)); });
}

void tango_sweep_destroy(tango_sweep* s) { delete s; }

}  // extern "C"
