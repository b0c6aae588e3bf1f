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

// tango-bench: batched insert/delete benchmark over libtango's C API.

#include <cstdio>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tango/tango.h"

namespace {

struct Args {
  std::string input;
  std::string synthetic;
  std::uint64_t vertices = 10000;
  std::uint64_t edges = 100000;
  std::string format = "tango";
  std::string algorithms = "bfs,pr,sssp,cc";
  std::uint64_t batch_size = 100000;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  std::uint64_t th1 = 0;
  bool weighted = false;
  bool directed = false;
  std::string report;
  std::string report_format = "csv";
  bool sweep = false;
  std::string config;
  std::uint64_t source = 0;
};

int die(tango_status s, const char* what) {
  std::fprintf(stderr, "tango-bench: %s: %s (%s)\n", what, tango_last_error(), tango_status_string(s));
  return 1;
}

unsigned algorithm_bits(const std::string& list) {
  static const std::map<std::string, unsigned> names = {
      {"bfs", TANGO_ALGO_BFS}, {"pr", TANGO_ALGO_PR}, {"sssp", TANGO_ALGO_SSSP}, {"cc", TANGO_ALGO_CC}};
  if (list.empty() || list == "none") return 0;
  unsigned bits = 0;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) bits |= names.at(item);
  return bits;
}

void print_summary(const char* label, const tango_summary& s) {
  std::printf("%s insert_batches=%llu delete_batches=%llu geomean_insert_eps=%.6g "
              "geomean_delete_eps=%.6g geomean_analytics_eps=%.6g mean_bytes_per_edge=%.6g "
              "peak_memory_bytes=%llu final_live_edges=%llu\n",
              label, static_cast<unsigned long long>(s.insert_batches),
              static_cast<unsigned long long>(s.delete_batches), s.geomean_insert_eps,
              s.geomean_delete_eps, s.geomean_analytics_eps, s.mean_bytes_per_edge,
              static_cast<unsigned long long>(s.peak_memory_bytes),
              static_cast<unsigned long long>(s.final_live_edges));
}

template <class T, void (*Destroy)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() {
    if (p != nullptr) Destroy(p);
  }
};

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"Streaming graph update/analytics benchmark"};
  auto* input = app.add_option("--input", a.input, "SNAP-style edge list (src dst [weight])");
  auto* synth = app.add_option("--synthetic", a.synthetic, "Generate a graph instead of reading one")
                    ->check(CLI::IsMember({"short", "heavy"}));
  input->excludes(synth);
  synth->excludes(input);
  app.add_option("--vertices", a.vertices, "Vertices for --synthetic")->check(CLI::PositiveNumber);
  app.add_option("--edges", a.edges, "Edges for --synthetic");
  app.add_option("--format", a.format, "Storage format")
      ->check(CLI::IsMember({"tango", "adlist-shared", "adlist-chunked"}));
  app.add_option("--algorithms", a.algorithms, "Comma separated subset of bfs,pr,sssp,cc (or none)");
  app.add_option("--batch-size", a.batch_size, "Edges per batch")->check(CLI::PositiveNumber);
  app.add_option("--threads", a.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", a.seed, "Seed for shuffling and generation");
  app.add_option("--th1", a.th1, "Type2/Type3 degree threshold (power of two)");
  app.add_flag("--weighted", a.weighted, "Weighted synthetic edges (input files: weighted if any line has a weight)");
  app.add_flag("--directed", a.directed, "Treat edges as directed");
  app.add_option("--report", a.report, "Write the per-batch report here");
  app.add_option("--report-format", a.report_format, "csv or tsv")->check(CLI::IsMember({"csv", "tsv"}));
  app.add_flag("--sweep-th1", a.sweep, "Run th1 = 8,16,...,512 and report throughput and memory");
  app.add_option("--config", a.config, "key=value configuration file");
  app.add_option("--source", a.source, "BFS/SSSP source vertex (dense id)");
  CLI11_PARSE(app, argc, argv);

  if (a.input.empty() && a.synthetic.empty()) {
    std::fprintf(stderr, "tango-bench: one of --input or --synthetic is required\n");
    return 2;
  }
  unsigned algos = 0;
  try {
    algos = algorithm_bits(a.algorithms);
  } catch (const std::out_of_range&) {
    std::fprintf(stderr, "tango-bench: unknown algorithm in '%s'\n", a.algorithms.c_str());
    return 2;
  }

  Handle<tango_config, tango_config_destroy> cfg;
  if (tango_status s = tango_config_create(&cfg.p); s != TANGO_OK) return die(s, "config");
  if (!a.config.empty()) {
    if (tango_status s = tango_config_load(cfg.p, a.config.c_str()); s != TANGO_OK) return die(s, "config file");
  }
  if (a.th1 != 0) {
    const std::string v = std::to_string(a.th1);
    if (tango_status s = tango_config_set(cfg.p, "th1", v.c_str()); s != TANGO_OK) return die(s, "--th1");
  }

  Handle<tango_edge_list, tango_edge_list_destroy> list;
  if (!a.input.empty()) {
    if (tango_status s = tango_edge_list_load_snap(a.input.c_str(), a.directed, &list.p); s != TANGO_OK) {
      return die(s, "load");
    }
  } else {
    const tango_shape shape = a.synthetic == "short" ? TANGO_SHAPE_SHORT_TAILED : TANGO_SHAPE_HEAVY_TAILED;
    if (tango_status s = tango_edge_list_generate(shape, a.vertices, a.edges, a.seed, a.weighted, a.directed, &list.p);
        s != TANGO_OK) {
      return die(s, "generate");
    }
  }
  tango_edge_list_shuffle(list.p, a.seed);

  tango_experiment_options opts;
  tango_experiment_options_init(&opts);
  opts.format = a.format == "tango"           ? TANGO_FORMAT_TANGO
                : a.format == "adlist-shared" ? TANGO_FORMAT_ADLIST_SHARED
                                              : TANGO_FORMAT_ADLIST_CHUNKED;
  opts.algorithms = algos;
  opts.batch_size = a.batch_size;
  opts.threads = a.threads;
  opts.source = a.source;
  const tango_report_format rfmt = a.report_format == "csv" ? TANGO_REPORT_CSV : TANGO_REPORT_TSV;

  std::printf("graph vertices=%llu edges=%llu weighted=%d directed=%d\n",
              static_cast<unsigned long long>(tango_edge_list_num_vertices(list.p)),
              static_cast<unsigned long long>(tango_edge_list_size(list.p)),
              tango_edge_list_weighted(list.p), a.directed ? 1 : 0);

  if (a.sweep) {
    Handle<tango_sweep, tango_sweep_destroy> sweep;
    if (tango_status s = tango_sweep_th1(cfg.p, list.p, &opts, nullptr, 0, &sweep.p); s != TANGO_OK) {
      return die(s, "sweep");
    }
    for (size_t i = 0; i < tango_sweep_size(sweep.p); ++i) {
      std::uint64_t th1 = 0;
      tango_summary sum{};
      tango_sweep_point(sweep.p, i, &th1, &sum);
      const std::string label = "th1=" + std::to_string(th1);
      print_summary(label.c_str(), sum);
    }
    if (!a.report.empty()) {
      if (tango_status s = tango_sweep_write(sweep.p, a.report.c_str(), rfmt); s != TANGO_OK) return die(s, "report");
    }
    return 0;
  }

  Handle<tango_report, tango_report_destroy> report;
  if (tango_status s = tango_run_experiment(cfg.p, list.p, &opts, &report.p); s != TANGO_OK) {
    return die(s, "experiment");
  }
  tango_summary sum{};
  tango_report_summary(report.p, &sum);
  print_summary(a.format.c_str(), sum);
  if (!a.report.empty()) {
    if (tango_status s = tango_report_write(report.p, a.report.c_str(), rfmt); s != TANGO_OK) return die(s, "report");
  }
  return 0;
}
