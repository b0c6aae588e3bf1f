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

// Incremental BFS / SSSP / CC / PageRank over any store exposing
// neighbors(v), in_neighbors(v), num_vertices() and directed().
//
// BFS, SSSP and CC are min-fixed-points, computed by frontier-based
// min-propagation with atomic fetch-min on the value array. Insert-only
// batches reuse the previous values and seed the frontier with the batch
// endpoints; any batch containing deletions (or, for SSSP, property
// rewrites) recomputes from scratch.
//
// PageRank uses
//
//   rank(v) = (1 - d) / |V| + d * sum_{u -> v} rank(u) / outdeg(u)
//
// with d = 0.85 and no redistribution of sink mass. After the first solve,
// batches re-iterate only the affected region: endpoints of changed edges
// and out-neighbours of vertices whose out-degree changed, expanding while
// any rank moves by more than the tolerance.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <span>
#include <vector>

#include "tango/core.hpp"
#include "tango/edges.hpp"
#include "tango/worker_pool.hpp"

namespace tango::analytics {

inline constexpr std::uint64_t kUnreached = ~std::uint64_t{0};

struct BatchDelta {
  std::span<const EdgeRecord> edges;
  bool deletion = false;
  bool property_updates = false;  // insert batch rewrote props of existing edges
};

template <class G>
concept GraphView = requires(const G& g, VertexId v) {
  { g.num_vertices() } -> std::convertible_to<std::uint64_t>;
  { g.directed() } -> std::convertible_to<bool>;
  { g.neighbors(v).size() } -> std::convertible_to<std::size_t>;
  { g.in_neighbors(v).size() } -> std::convertible_to<std::size_t>;
};

struct DistanceState {
  std::vector<std::uint64_t> values;
  VertexId source = 0;
  bool valid = false;
  bool last_run_full = false;
  std::uint64_t rounds = 0;
};

struct ComponentState {
  std::vector<std::uint64_t> labels;
  bool valid = false;
  bool last_run_full = false;
  std::uint64_t rounds = 0;
};

struct RankState {
  std::vector<double> ranks;
  bool valid = false;
  bool last_run_full = false;
  unsigned iterations = 0;
};

struct PageRankParams {
  double damping = 0.85;
  double tolerance = 1e-7;
  unsigned max_iterations = 100;
};

namespace detail {

// Lowers values[] to the least fixed point reachable from `frontier`.
// cand(value_of_u, edge) gives the candidate value for edge.dst.
template <GraphView G, class Candidate>
std::uint64_t propagate_min(const G& g, std::vector<std::uint64_t>& values,
                            std::vector<VertexId> frontier, bool follow_in_edges,
                            Candidate cand, WorkerPool* pool) {
  const std::uint64_t n = g.num_vertices();
  const unsigned workers = pool == nullptr ? 1 : pool->size();
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<std::vector<VertexId>> next(workers);
  std::uint32_t round = 0;

  auto relax = [&](VertexId u, unsigned w) {
    const std::uint64_t du = std::atomic_ref<std::uint64_t>(values[u]).load(std::memory_order_relaxed);
    auto visit = [&](const auto& e) {
      const std::uint64_t c = cand(du, e);
      std::atomic_ref<std::uint64_t> target(values[e.dst]);
      std::uint64_t cur = target.load(std::memory_order_relaxed);
      while (c < cur) {
        if (target.compare_exchange_weak(cur, c, std::memory_order_relaxed)) {
          if (std::atomic_ref<std::uint32_t>(stamp[e.dst]).exchange(round, std::memory_order_relaxed) != round) {
            next[w].push_back(e.dst);
          }
          break;
        }
      }
    };
    for (const auto& e : g.neighbors(u)) visit(e);
    if (follow_in_edges) {
      for (const auto& e : g.in_neighbors(u)) visit(e);
    }
  };

  while (!frontier.empty()) {
    ++round;
    if (pool == nullptr) {
      for (VertexId u : frontier) relax(u, 0);
    } else {
      pool->parallel_for(frontier.size(), [&](std::size_t i, unsigned w) { relax(frontier[i], w); });
    }
    frontier.clear();
    for (auto& part : next) {
      frontier.insert(frontier.end(), part.begin(), part.end());
      part.clear();
    }
  }
  return round;
}

// Batch endpoints repeat a lot (hubs); each seed must be relaxed once.
inline void drop_repeats(std::uint64_t n, std::vector<VertexId>& seeds) {
  std::vector<bool> seen(n);
  std::size_t kept = 0;
  for (VertexId v : seeds) {
    if (!seen[v]) {
      seen[v] = true;
      seeds[kept++] = v;
    }
  }
  seeds.resize(kept);
}

template <GraphView G>
std::vector<VertexId> reached_endpoints(const G& g, const std::vector<std::uint64_t>& values,
                                        const BatchDelta& delta) {
  std::vector<VertexId> frontier;
  for (const EdgeRecord& e : delta.edges) {
    if (values[e.src] != kUnreached) frontier.push_back(e.src);
    if (!g.directed() && values[e.dst] != kUnreached) frontier.push_back(e.dst);
  }
  drop_repeats(g.num_vertices(), frontier);
  return frontier;
}

template <GraphView G, class Candidate>
void run_distance(const G& g, DistanceState& st, VertexId source, const BatchDelta& delta,
                  bool full_on_property_updates, Candidate cand, WorkerPool* pool) {
  const std::uint64_t n = g.num_vertices();
  if (source >= n) {
    throw Error(Errc::vertex_out_of_range, "analytics: source vertex out of range");
  }
  const bool full = !st.valid || st.source != source || st.values.size() != n || delta.deletion ||
                    (full_on_property_updates && delta.property_updates);
  std::vector<VertexId> frontier;
  if (full) {
    st.values.assign(n, kUnreached);
    st.values[source] = 0;
    frontier.push_back(source);
  } else {
    frontier = reached_endpoints(g, st.values, delta);
  }
  st.rounds = propagate_min(g, st.values, std::move(frontier), false, cand, pool);
  st.source = source;
  st.valid = true;
  st.last_run_full = full;
}

}  // namespace detail

template <GraphView G>
void run_bfs(const G& g, DistanceState& st, VertexId source, const BatchDelta& delta,
             WorkerPool* pool = nullptr) {
  detail::run_distance(
      g, st, source, delta, false, [](std::uint64_t du, const auto&) { return du + 1; }, pool);
}

template <GraphView G>
void run_sssp(const G& g, DistanceState& st, VertexId source, const BatchDelta& delta,
              WorkerPool* pool = nullptr) {
  detail::run_distance(
      g, st, source, delta, true,
      [](std::uint64_t du, const auto& e) { return du + edge_prop(e); }, pool);
}

template <GraphView G>
void run_cc(const G& g, ComponentState& st, const BatchDelta& delta, WorkerPool* pool = nullptr) {
  const std::uint64_t n = g.num_vertices();
  const bool full = !st.valid || st.labels.size() != n || delta.deletion;
  std::vector<VertexId> frontier;
  if (full) {
    st.labels.resize(n);
    frontier.resize(n);
    for (VertexId v = 0; v < n; ++v) st.labels[v] = frontier[v] = v;
  } else {
    frontier.reserve(2 * delta.edges.size());
    for (const EdgeRecord& e : delta.edges) {
      frontier.push_back(e.src);
      frontier.push_back(e.dst);
    }
    detail::drop_repeats(n, frontier);
  }
  st.rounds = detail::propagate_min(
      g, st.labels, std::move(frontier), g.directed(),
      [](std::uint64_t label, const auto&) { return label; }, pool);
  st.valid = true;
  st.last_run_full = full;
}

template <GraphView G>
void run_pr(const G& g, RankState& st, const BatchDelta& delta, WorkerPool* pool = nullptr,
            const PageRankParams& params = {}) {
  const std::uint64_t n = g.num_vertices();
  if (n == 0) {
    st.ranks.clear();
    st.valid = true;
    return;
  }
  const double base = (1.0 - params.damping) / static_cast<double>(n);
  // share[u] = rank(u) / outdeg(u), refreshed whenever rank(u) changes
  std::vector<double> out_degree(n), share(n);
  auto for_all = [&](auto&& fn) {
    if (pool == nullptr) {
      for (std::size_t v = 0; v < n; ++v) fn(v, 0u);
    } else {
      pool->parallel_for(n, fn);
    }
  };
  for_all([&](std::size_t v, unsigned) { out_degree[v] = static_cast<double>(g.neighbors(v).size()); });
  auto refresh = [&](std::size_t u) { share[u] = out_degree[u] > 0 ? st.ranks[u] / out_degree[u] : 0.0; };
  auto pull = [&](VertexId v) {
    double sum = 0.0;
    for (const auto& e : g.in_neighbors(v)) sum += share[e.dst];
    return base + params.damping * sum;
  };

  const bool full = !st.valid || st.ranks.size() != n;
  st.last_run_full = full;
  st.iterations = 0;
  if (full) {
    st.ranks.assign(n, 1.0 / static_cast<double>(n));
    std::vector<double> fresh(n);
    const unsigned workers = pool == nullptr ? 1 : pool->size();
    std::vector<double> worker_delta(workers);
    for (unsigned it = 0; it < params.max_iterations; ++it) {
      std::fill(worker_delta.begin(), worker_delta.end(), 0.0);
      for_all([&](std::size_t u, unsigned) { refresh(u); });
      auto body = [&](std::size_t v, unsigned w) {
        fresh[v] = pull(v);
        worker_delta[w] = std::max(worker_delta[w], std::abs(fresh[v] - st.ranks[v]));
      };
      if (pool == nullptr) {
        for (std::size_t v = 0; v < n; ++v) body(v, 0);
      } else {
        pool->parallel_for(n, body);
      }
      st.ranks.swap(fresh);
      ++st.iterations;
      if (*std::max_element(worker_delta.begin(), worker_delta.end()) < params.tolerance) break;
    }
    st.valid = true;
    return;
  }

  for_all([&](std::size_t u, unsigned) { refresh(u); });
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 1;
  std::vector<VertexId> active;
  auto activate = [&](VertexId v) {
    if (stamp[v] != round) {
      stamp[v] = round;
      active.push_back(v);
    }
  };
  // endpoints whose out-degree changed; their whole out-list needs a re-pull
  std::vector<VertexId> touched;
  touched.reserve(2 * delta.edges.size());
  for (const EdgeRecord& e : delta.edges) {
    activate(e.dst);
    touched.push_back(e.src);
    if (!g.directed()) {
      activate(e.src);
      touched.push_back(e.dst);
    }
  }
  detail::drop_repeats(n, touched);
  for (VertexId u : touched) {
    for (const auto& x : g.neighbors(u)) activate(x.dst);
  }

  const unsigned workers = pool == nullptr ? 1 : pool->size();
  std::vector<double> fresh;
  std::vector<std::vector<VertexId>> changed(workers);
  while (!active.empty() && st.iterations < params.max_iterations) {
    fresh.resize(active.size());
    auto body = [&](std::size_t i, unsigned w) {
      const VertexId v = active[i];
      fresh[i] = pull(v);
      if (std::abs(fresh[i] - st.ranks[v]) > params.tolerance) changed[w].push_back(v);
    };
    if (pool == nullptr) {
      for (std::size_t i = 0; i < active.size(); ++i) body(i, 0);
    } else {
      pool->parallel_for(active.size(), body);
    }
    for (std::size_t i = 0; i < active.size(); ++i) {
      st.ranks[active[i]] = fresh[i];
      refresh(active[i]);
    }
    ++st.iterations;
    ++round;
    active.clear();
    for (auto& part : changed) {
      for (VertexId v : part) {
        for (const auto& x : g.neighbors(v)) activate(x.dst);
      }
      part.clear();
    }
  }
  st.valid = true;
}

}  // namespace tango::analytics
