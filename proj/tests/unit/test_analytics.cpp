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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "support/oracles.hpp"
#include "tango/analytics.hpp"
#include "tango/baseline.hpp"
#include "tango/store.hpp"

using namespace tango;
using namespace tango::analytics;

namespace {

std::vector<std::uint64_t> to_lib(std::vector<std::uint64_t> v) {
  for (auto& x : v) {
    if (x == oracle::kInf) x = kUnreached;
  }
  return v;
}

Config make_config(bool weighted, bool directed, std::uint64_t th1 = 16) {
  Config c;
  c.weighted = weighted;
  c.directed = directed;
  c.th1 = th1;
  return c;
}

}  // namespace

TEST_CASE("bfs on an empty graph reaches only the source") {
  GraphStore g(make_config(false, false), 5);
  DistanceState st;
  run_bfs(g, st, 2, {});
  CHECK(st.values == std::vector<std::uint64_t>{kUnreached, kUnreached, 0, kUnreached, kUnreached});
  CHECK_THROWS_AS(run_bfs(g, st, 5, {}), Error);
}

TEST_CASE("bfs on a path") {
  GraphStore g(make_config(false, false), 4);
  for (VertexId v = 0; v + 1 < 4; ++v) g.insert_edge(v, v + 1);
  DistanceState st;
  run_bfs(g, st, 0, {});
  CHECK(st.values == std::vector<std::uint64_t>{0, 1, 2, 3});
}

TEST_CASE("sssp single edge and a cheaper two-hop route") {
  WeightedGraphStore g(make_config(true, true), 3);
  g.insert_edge(0, 1, 5);
  DistanceState st;
  run_sssp(g, st, 0, {});
  CHECK(st.values == std::vector<std::uint64_t>{0, 5, kUnreached});

  const EdgeRecord batch[] = {{0, 2, 1}, {2, 1, 2}};
  for (const auto& e : batch) g.insert_edge(e.src, e.dst, e.prop);
  run_sssp(g, st, 0, BatchDelta{batch});
  CHECK_FALSE(st.last_run_full);
  CHECK(st.values == std::vector<std::uint64_t>{0, 3, 1});
}

TEST_CASE("pagerank examples") {
  GraphStore one(make_config(false, false), 1);
  RankState r;
  run_pr(one, r, {});
  REQUIRE(r.ranks.size() == 1);
  CHECK(r.ranks[0] == doctest::Approx(0.15).epsilon(1e-12));

  GraphStore pair(make_config(false, false), 2);
  pair.insert_edge(0, 1);
  RankState p;
  run_pr(pair, p, {});
  CHECK(p.ranks[0] == doctest::Approx(p.ranks[1]).epsilon(1e-9));
  CHECK(p.ranks[0] == doctest::Approx(0.5).epsilon(1e-6));
}

TEST_CASE("connected components") {
  GraphStore g(make_config(false, false), 4);
  ComponentState st;
  run_cc(g, st, {});
  CHECK(st.labels == std::vector<std::uint64_t>{0, 1, 2, 3});
  const EdgeRecord chain[] = {{3, 2, 1}, {2, 1, 1}, {1, 0, 1}};
  for (const auto& e : chain) g.insert_edge(e.src, e.dst);
  run_cc(g, st, BatchDelta{chain});
  CHECK(st.labels == std::vector<std::uint64_t>{0, 0, 0, 0});

  // directed: weak connectivity
  GraphStore d(make_config(false, true), 3);
  d.insert_edge(2, 1);
  ComponentState ds;
  run_cc(d, ds, {});
  CHECK(ds.labels == std::vector<std::uint64_t>{0, 1, 1});
}

TEST_CASE("analytics never query the hash index") {
  GraphStore g(make_config(false, false, 8), 200);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 3000; ++i) g.insert_edge(rng() % 20, rng() % 200);
  g.reset_counters();
  DistanceState b;
  RankState r;
  ComponentState c;
  run_bfs(g, b, 0, {});
  run_pr(g, r, {});
  run_cc(g, c, {});
  CHECK(g.counters().hash_lookups == 0);
}

namespace {

template <class Store>
void batched_against_oracle(bool directed, std::uint64_t seed, WorkerPool* pool) {
  constexpr bool weighted = std::is_same_v<typename Store::edge_type, WeightedEdge>;
  const std::uint64_t n = 300;
  Config c = make_config(weighted, directed, 8);
  Store g = [&] {
    if constexpr (std::is_constructible_v<Store, Config, std::uint64_t, AdjListMode>) {
      return Store(c, n, AdjListMode::chunked);
    } else {
      return Store(c, n);
    }
  }();
  oracle::ModelGraph model(n, directed);
  std::mt19937_64 rng(seed);
  std::vector<EdgeRecord> pool_edges;
  for (int i = 0; i < 3000; ++i) {
    const VertexId a = rng() % 4 ? rng() % n : rng() % 5;
    pool_edges.push_back({a, static_cast<VertexId>(rng() % n), weighted ? 1 + rng() % 20 : 1});
  }
  DistanceState bfs, sssp;
  RankState pr;
  ComponentState cc;
  const std::size_t per = 300;
  auto check = [&] {
    REQUIRE(bfs.values == to_lib(oracle::bfs(model, 1)));
    REQUIRE(sssp.values == to_lib(oracle::dijkstra(model, 1)));
    REQUIRE(cc.labels == oracle::components(model));
    const auto want = oracle::pagerank(model);
    for (VertexId v = 0; v < n; ++v) REQUIRE(pr.ranks[v] == doctest::Approx(want[v]).epsilon(1e-5));
  };
  for (bool deletion : {false, true}) {
    for (std::size_t off = 0; off < pool_edges.size(); off += per) {
      std::span<const EdgeRecord> batch(pool_edges.data() + off, per);
      bool props = false;
      for (const auto& e : batch) {
        if (deletion) {
          g.delete_edge(e.src, e.dst);
          model.erase(e.src, e.dst);
        } else {
          if (g.insert_edge(e.src, e.dst, e.prop) == UpdateResult::updated) props = true;
          model.insert(e.src, e.dst, e.prop);
        }
      }
      const BatchDelta delta{batch, deletion, props};
      run_bfs(g, bfs, 1, delta, pool);
      run_sssp(g, sssp, 1, delta, pool);
      run_cc(g, cc, delta, pool);
      run_pr(g, pr, delta, pool);
      check();
    }
  }
}

}  // namespace

TEST_CASE("batched analytics agree with reference algorithms") {
  for (bool directed : {false, true}) {
    batched_against_oracle<GraphStore>(directed, 11, nullptr);
    batched_against_oracle<WeightedGraphStore>(directed, 12, nullptr);
    batched_against_oracle<AdjListStore<WeightedEdge>>(directed, 13, nullptr);
  }
}

TEST_CASE("parallel analytics give the same answers") {
  WorkerPool pool(4);
  for (bool directed : {false, true}) {
    batched_against_oracle<WeightedGraphStore>(directed, 21, &pool);
    batched_against_oracle<AdjListStore<PlainEdge>>(directed, 22, &pool);
  }
}
