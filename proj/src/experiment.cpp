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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>

#include "tango/baseline.hpp"
#include "tango/bench.hpp"
#include "tango/store.hpp"
#include "tango/worker_pool.hpp"

namespace tango::bench {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

double rate(double amount, double seconds) { return seconds > 0 ? amount / seconds : 0.0; }

// One adjacency-list mutation. `primary` marks the src-side out half, which
// is the one that decides whether the logical edge was new / present.
struct HalfOp {
  VertexId v;
  VertexId nbr;
  std::uint64_t prop;
  Side side;
  bool primary;
};

struct alignas(64) WorkerTally {
  std::uint64_t applied = 0;
  bool updated = false;
};

struct BatchOutcome {
  std::uint64_t applied = 0;  // logical edges inserted / deleted
  bool updated = false;       // some insert hit an existing edge
};

// Owner-partitioned formats get routed halves; shared adjacency lists lock.
template <class Store>
bool owner_routed(const Store& s) {
  if constexpr (requires { s.mode(); }) {
    return s.mode() == AdjListMode::chunked;
  } else {
    return true;
  }
}

template <class Store>
class Runner {
 public:
  Runner(Store& store, const EdgeList& list, const ExperimentOptions& opt, WorkerPool& pool)
      : store_(store), list_(list), opt_(opt), pool_(pool), tally_(opt.threads) {
    if (opt.threads > 1) buckets_.resize(std::size_t{opt.threads} * opt.threads);
  }

  ExperimentResult run(const BatchObserver& observer) {
    ExperimentResult result;
    result.format = opt_.format;
    std::uint64_t live = 0;
    const std::span<const EdgeRecord> all(list_.edges);

    for (const Phase phase : {Phase::insert, Phase::erase}) {
      const bool erase = phase == Phase::erase;
      std::uint64_t index = 0;
      for (std::size_t begin = 0; begin < all.size(); begin += opt_.batch_size, ++index) {
        const auto batch = all.subspan(begin, std::min(opt_.batch_size, all.size() - begin));
        BatchReport r;
        r.batch = index;
        r.phase = phase;
        r.edges = batch.size();

        reset_probes();
        const auto t0 = Clock::now();
        const BatchOutcome out = apply(batch, erase);
        r.update_seconds = seconds_since(t0);
        r.update_eps = rate(static_cast<double>(batch.size()), r.update_seconds);
        live = erase ? live - out.applied : live + out.applied;
        r.live_edges = live;

        const analytics::BatchDelta delta{batch, erase, out.updated};
        run_analytics(delta, r);

        r.memory_bytes = store_.memory_bytes();
        r.bytes_per_edge = live == 0 ? 0.0 : static_cast<double>(r.memory_bytes) / static_cast<double>(live);
        read_probes(r);

        result.batches.push_back(r);
        if (observer) observer(r, view());
      }
    }
    summarize(result, live);
    return result;
  }

 private:
  static void apply_half(Store& s, const HalfOp& op, bool erase, WorkerTally& t) {
    if (erase) {
      if (s.delete_half(op.side, op.v, op.nbr) == DeleteResult::deleted && op.primary) ++t.applied;
    } else if (s.insert_half(op.side, op.v, op.nbr, op.prop) == UpdateResult::inserted) {
      if (op.primary) ++t.applied;
    } else if (op.primary) {
      t.updated = true;
    }
  }

  template <class Fn>
  void for_each_half(const EdgeRecord& e, Fn&& fn) const {
    fn(HalfOp{e.src, e.dst, e.prop, Side::out, true});
    if (list_.directed) {
      fn(HalfOp{e.dst, e.src, e.prop, Side::in, false});
    } else if (e.src != e.dst) {
      fn(HalfOp{e.dst, e.src, e.prop, Side::out, false});
    }
  }

  BatchOutcome apply(std::span<const EdgeRecord> batch, bool erase) {
    const unsigned T = opt_.threads;
    for (auto& t : tally_) t = WorkerTally{};

    if (owner_routed(store_)) {
      if (T == 1) {
        for (const EdgeRecord& e : batch) {
          for_each_half(e, [&](const HalfOp& op) { apply_half(store_, op, erase, tally_[0]); });
        }
      } else {
        // Route: each worker scans a contiguous slice and buckets the halves
        // by owner. Then every owner drains its buckets in worker order, so
        // per-vertex operation order equals batch order.
        pool_.run([&](unsigned w) {
          for (unsigned o = 0; o < T; ++o) buckets_[std::size_t{w} * T + o].clear();
          const std::size_t b = batch.size() * w / T;
          const std::size_t end = batch.size() * (w + 1) / T;
          for (std::size_t i = b; i < end; ++i) {
            for_each_half(batch[i], [&](const HalfOp& op) {
              buckets_[std::size_t{w} * T + store_.owner_of(op.v)].push_back(op);
            });
          }
        });
        pool_.run([&](unsigned o) {
          for (unsigned w = 0; w < T; ++w) {
            for (const HalfOp& op : buckets_[std::size_t{w} * T + o]) apply_half(store_, op, erase, tally_[o]);
          }
        });
      }
    } else {
      // Shared adjacency lists: contiguous slices, per-vertex locks inside the store.
      pool_.run([&](unsigned w) {
        const std::size_t b = batch.size() * w / T;
        const std::size_t end = batch.size() * (w + 1) / T;
        WorkerTally& t = tally_[w];
        for (std::size_t i = b; i < end; ++i) {
          const EdgeRecord& e = batch[i];
          if (erase) {
            if (store_.delete_edge(e.src, e.dst) == DeleteResult::deleted) ++t.applied;
          } else if (store_.insert_edge(e.src, e.dst, e.prop) == UpdateResult::inserted) {
            ++t.applied;
          } else {
            t.updated = true;
          }
        }
      });
    }

    BatchOutcome out;
    for (const auto& t : tally_) {
      out.applied += t.applied;
      out.updated = out.updated || t.updated;
    }
    return out;
  }

  void run_analytics(const analytics::BatchDelta& delta, BatchReport& r) {
    WorkerPool* pool = opt_.threads > 1 ? &pool_ : nullptr;
    unsigned count = 0;
    auto timed = [&](unsigned bit, double& slot, auto&& fn) {
      if ((opt_.algorithms & bit) == 0) return;
      const auto t0 = Clock::now();
      fn();
      slot = seconds_since(t0);
      r.analytics_seconds += slot;
      ++count;
    };
    timed(kBfs, r.bfs_seconds, [&] { analytics::run_bfs(store_, bfs_, opt_.source, delta, pool); });
    timed(kPageRank, r.pr_seconds, [&] { analytics::run_pr(store_, pr_, delta, pool); });
    timed(kSssp, r.sssp_seconds, [&] { analytics::run_sssp(store_, sssp_, opt_.source, delta, pool); });
    timed(kCc, r.cc_seconds, [&] { analytics::run_cc(store_, cc_, delta, pool); });
    r.analytics_eps = rate(static_cast<double>(r.live_edges) * count, r.analytics_seconds);
  }

  AnalyticsView view() const {
    AnalyticsView v;
    if (opt_.algorithms & kBfs) v.bfs = &bfs_;
    if (opt_.algorithms & kPageRank) v.pr = &pr_;
    if (opt_.algorithms & kSssp) v.sssp = &sssp_;
    if (opt_.algorithms & kCc) v.cc = &cc_;
    return v;
  }

  void reset_probes() {
    if constexpr (requires { store_.reset_counters(); }) store_.reset_counters();
  }

  void read_probes(BatchReport& r) const {
    if constexpr (requires { store_.counters(); }) {
      ProbeHistogram h = store_.counters().probes.insert;
      h.merge(store_.counters().probes.find);
      r.probe_samples = h.samples();
      r.probe_mean = h.mean();
      r.probe_le8_fraction = h.fraction_at_most(8);
    }
  }

  void summarize(ExperimentResult& result, std::uint64_t live) const {
    ExperimentSummary& s = result.summary;
    std::vector<double> ins, del, ana;
    double bpe = 0;
    std::uint64_t bpe_n = 0;
    for (const BatchReport& r : result.batches) {
      (r.phase == Phase::insert ? ins : del).push_back(r.update_eps);
      if (opt_.algorithms != 0) ana.push_back(r.analytics_eps);
      if (r.live_edges > 0) {
        bpe += r.bytes_per_edge;
        ++bpe_n;
      }
      s.peak_memory_bytes = std::max(s.peak_memory_bytes, r.memory_bytes);
      s.total_update_seconds += r.update_seconds;
      s.total_analytics_seconds += r.analytics_seconds;
    }
    s.insert_batches = ins.size();
    s.delete_batches = del.size();
    s.geomean_insert_eps = geometric_mean(ins);
    s.geomean_delete_eps = geometric_mean(del);
    s.geomean_analytics_eps = geometric_mean(ana);
    s.mean_bytes_per_edge = bpe_n == 0 ? 0.0 : bpe / static_cast<double>(bpe_n);
    s.final_live_edges = live;
    for (VertexId v = 0; v < store_.num_vertices(); ++v) s.final_stored_edges += store_.neighbors(v).size();
  }

  Store& store_;
  const EdgeList& list_;
  const ExperimentOptions& opt_;
  WorkerPool& pool_;
  std::vector<WorkerTally> tally_;
  std::vector<std::vector<HalfOp>> buckets_;
  analytics::DistanceState bfs_;
  analytics::DistanceState sssp_;
  analytics::RankState pr_;
  analytics::ComponentState cc_;
};

template <StoredEdge E>
ExperimentResult dispatch(const EdgeList& list, const ExperimentOptions& opt, const Config& config,
                          const BatchObserver& observer) {
  WorkerPool pool(opt.threads);
  switch (opt.format) {
    case Format::tango: {
      HybridStore<E> store(config, list.num_vertices, opt.threads);
      return Runner(store, list, opt, pool).run(observer);
    }
    case Format::adlist_shared: {
      AdjListStore<E> store(config, list.num_vertices, AdjListMode::shared, opt.threads);
      return Runner(store, list, opt, pool).run(observer);
    }
    case Format::adlist_chunked: {
      AdjListStore<E> store(config, list.num_vertices, AdjListMode::chunked, opt.threads);
      return Runner(store, list, opt, pool).run(observer);
    }
  }
  throw Error(Errc::invalid_argument, "unknown format");
}

}  // namespace

double geometric_mean(std::span<const double> values) {
  double log_sum = 0;
  std::size_t n = 0;
  for (double v : values) {
    if (v > 0) {
      log_sum += std::log(v);
      ++n;
    }
  }
  return n == 0 ? 0.0 : std::exp(log_sum / static_cast<double>(n));
}

ExperimentResult run_experiment(const EdgeList& list, const ExperimentOptions& options,
                                const BatchObserver& observer) {
  if (options.batch_size == 0) throw Error(Errc::invalid_argument, "batch size must be >= 1");
  if (options.threads == 0) throw Error(Errc::invalid_argument, "thread count must be >= 1");
  if ((options.algorithms & ~kAllAlgorithms) != 0) {
    throw Error(Errc::invalid_argument, "unknown algorithm bit");
  }
  Config config = options.config;
  config.weighted = list.weighted;
  config.directed = list.directed;
  config.validate();
  for (const EdgeRecord& e : list.edges) {
    if (e.src >= list.num_vertices || e.dst >= list.num_vertices) {
      throw Error(Errc::vertex_out_of_range, "edge list references a vertex >= num_vertices");
    }
  }
  if (list.edges.empty()) {
    ExperimentResult empty;
    empty.format = options.format;
    return empty;
  }
  if ((options.algorithms & (kBfs | kSssp)) != 0 && options.source >= list.num_vertices) {
    throw Error(Errc::vertex_out_of_range, "source vertex out of range");
  }
  ExperimentOptions opt = options;
  opt.config = config;
  return list.weighted ? dispatch<WeightedEdge>(list, opt, config, observer)
                       : dispatch<PlainEdge>(list, opt, config, observer);
}

std::vector<SweepPoint> sweep_th1(const EdgeList& list, ExperimentOptions options,
                                  std::span<const std::uint64_t> th1_values) {
  options.format = Format::tango;
  std::vector<SweepPoint> points;
  points.reserve(th1_values.size());
  for (std::uint64_t th1 : th1_values) {
    options.config.th1 = th1;
    points.push_back({th1, run_experiment(list, options).summary});
  }
  return points;
}

}  // namespace tango::bench
