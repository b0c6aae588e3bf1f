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

#pragma once

// Benchmark harness: edge-list ingestion (SNAP-style text or synthetic),
// shuffling, batched insert/delete runs with analytics after every batch,
// and CSV/TSV reporting.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tango/analytics.hpp"
#include "tango/core.hpp"

namespace tango::bench {

struct EdgeList {
  std::vector<EdgeRecord> edges;
  std::uint64_t num_vertices = 0;
  bool directed = false;
  bool weighted = false;
  // original_ids[dense] = id as written in the input; empty for synthetic lists.
  std::vector<std::uint64_t> original_ids;
};

// "src dst [weight]" per line, '#' starts a comment line, blank lines are
// skipped. Ids are remapped to [0, V) in order of first appearance. A list is
// weighted iff any line carries a weight; missing weights default to 1.
EdgeList parse_snap(std::istream& in, std::string_view source_name = "<input>");
EdgeList load_snap(const std::filesystem::path& path);

// Seeded uniform permutation (mt19937_64).
void shuffle(EdgeList& list, std::uint64_t seed);

enum class Synthetic { short_tailed, heavy_tailed };

// short_tailed: both endpoints uniform. heavy_tailed: sources uniform,
// destinations Zipf(s = 1) over a random ranking of the vertices, giving a
// degree distribution with power-law exponent 2. No self loops. Weights (if
// requested) are 1..100, a function of the unordered endpoint pair.
EdgeList gen_synthetic(Synthetic kind, std::uint64_t num_vertices, std::uint64_t num_edges,
                       std::uint64_t seed, bool weighted = false, bool directed = false);

// Largest number of edges touching one vertex within any batch. Both
// endpoints count for undirected lists, only sources for directed ones.
std::uint64_t max_batch_degree(const EdgeList& list, std::size_t batch_size);

enum class Format { tango, adlist_shared, adlist_chunked };

enum Algorithm : unsigned {
  kBfs = 1u << 0,
  kPageRank = 1u << 1,
  kSssp = 1u << 2,
  kCc = 1u << 3,
};
inline constexpr unsigned kAllAlgorithms = kBfs | kPageRank | kSssp | kCc;

std::string_view to_string(Format f) noexcept;
Format parse_format(std::string_view name);
// Comma separated subset of bfs,pr,sssp,cc; "" or "none" gives 0.
unsigned parse_algorithms(std::string_view list);

struct ExperimentOptions {
  Config config;  // weighted/directed are overridden by the edge list
  Format format = Format::tango;
  unsigned algorithms = kAllAlgorithms;
  std::size_t batch_size = 100000;
  unsigned threads = 1;
  VertexId source = 0;  // BFS / SSSP root
};

enum class Phase { insert, erase, summary };
std::string_view to_string(Phase p) noexcept;

struct BatchReport {
  std::uint64_t batch = 0;
  Phase phase = Phase::insert;
  std::uint64_t edges = 0;
  double update_seconds = 0;
  double update_eps = 0;
  double analytics_seconds = 0;
  double analytics_eps = 0;
  double bfs_seconds = 0;
  double pr_seconds = 0;
  double sssp_seconds = 0;
  double cc_seconds = 0;
  std::uint64_t live_edges = 0;
  std::uint64_t memory_bytes = 0;
  double bytes_per_edge = 0;
  std::uint64_t probe_samples = 0;
  double probe_mean = 0;
  double probe_le8_fraction = 0;
};

struct ExperimentSummary {
  std::uint64_t insert_batches = 0;
  std::uint64_t delete_batches = 0;
  double geomean_insert_eps = 0;
  double geomean_delete_eps = 0;
  double geomean_analytics_eps = 0;
  double mean_bytes_per_edge = 0;
  std::uint64_t peak_memory_bytes = 0;
  double total_update_seconds = 0;
  double total_analytics_seconds = 0;
  std::uint64_t final_live_edges = 0;
  std::uint64_t final_stored_edges = 0;  // sum of out-list lengths after the run
};

struct ExperimentResult {
  Format format = Format::tango;
  std::vector<BatchReport> batches;
  ExperimentSummary summary;
};

// Analytics values after a batch; members are null for algorithms not run.
struct AnalyticsView {
  const analytics::DistanceState* bfs = nullptr;
  const analytics::RankState* pr = nullptr;
  const analytics::DistanceState* sssp = nullptr;
  const analytics::ComponentState* cc = nullptr;
};
using BatchObserver = std::function<void(const BatchReport&, const AnalyticsView&)>;

ExperimentResult run_experiment(const EdgeList& list, const ExperimentOptions& options,
                                const BatchObserver& observer = {});

// Over the positive entries; 0 when there are none.
double geometric_mean(std::span<const double> values);

enum class ReportFormat { csv, tsv };
ReportFormat parse_report_format(std::string_view name);

// Names of the columns, in order, as written in the header row.
const std::vector<std::string>& report_columns();

extern const char* const kPageRankNote;

void emit_report(std::ostream& out, const ExperimentResult& result, ReportFormat fmt);
void emit_report(const std::filesystem::path& path, const ExperimentResult& result,
                 ReportFormat fmt);

// Reads a report written by emit_report back. The summary row is returned
// separately; fields it does not carry stay zero.
ExperimentResult read_report(std::istream& in, ReportFormat fmt);

struct SweepPoint {
  std::uint64_t th1 = 0;
  ExperimentSummary summary;
};

inline constexpr std::uint64_t kDefaultSweep[] = {8, 16, 32, 64, 128, 256, 512};

std::vector<SweepPoint> sweep_th1(const EdgeList& list, ExperimentOptions options,
                                  std::span<const std::uint64_t> th1_values = kDefaultSweep);
void emit_sweep(std::ostream& out, std::span<const SweepPoint> points, ReportFormat fmt);
void emit_sweep(const std::filesystem::path& path, std::span<const SweepPoint> points,
                ReportFormat fmt);

}  // namespace tango::bench
