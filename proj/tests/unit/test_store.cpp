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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "support/oracles.hpp"
#include "tango/store.hpp"

using namespace tango;

namespace {

Config unweighted(std::uint64_t th1 = 32) {
  Config c;
  c.th1 = th1;
  return c;
}

Config weighted(std::uint64_t th1 = 32) {
  Config c;
  c.weighted = true;
  c.th1 = th1;
  return c;
}

template <class S>
std::set<VertexId> nbr_set(const S& s, VertexId v, Side side = Side::out) {
  std::set<VertexId> out;
  for (const auto& e : s.neighbors(side, v)) out.insert(e.dst);
  return out;
}

template <class S>
void fill(S& s, VertexId v, VertexId count, VertexId first = 1) {
  for (VertexId i = 0; i < count; ++i) REQUIRE(s.insert_half(Side::out, v, first + i) == UpdateResult::inserted);
}

}  // namespace

TEST_CASE("fresh store") {
  GraphStore s(unweighted(), 100);
  for (VertexId v = 0; v < 100; ++v) {
    REQUIRE(s.degree(v) == 0);
    REQUIRE(s.vertex_kind(v) == VertexKind::type1);
    REQUIRE(s.neighbors(v).empty());
  }
  CHECK(s.memory_bytes() == 100 * 64 + 100 * 8);
  CHECK(reinterpret_cast<std::uintptr_t>(s.record_address(Side::out, 0)) % 4096 == 0);
  CHECK(s.record_address(Side::out, 1) - s.record_address(Side::out, 0) == 64);

  Config d = unweighted();
  d.directed = true;
  GraphStore ds(d, 100);
  CHECK(ds.memory_bytes() == 100 * 64 * 2 + 100 * 8);
  CHECK(reinterpret_cast<std::uintptr_t>(ds.record_address(Side::in, 0)) % 4096 == 0);
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(GraphStore(weighted(), 10), Error);
  CHECK_THROWS_AS(WeightedGraphStore(unweighted(), 10), Error);
  Config bad;
  bad.th1 = 24;
  CHECK_THROWS_AS(GraphStore(bad, 10), Error);
  GraphStore s(unweighted(), 10);
  try {
    s.insert_edge(3, 10);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::vertex_out_of_range);
  }
  CHECK_THROWS_AS(s.delete_edge(10, 3), Error);
  CHECK_THROWS_AS(s.degree(10), Error);
}

TEST_CASE("type upgrades on insert (th0 = 7, th1 = 32)") {
  GraphStore s(unweighted(), 200);
  CHECK(s.insert_half(Side::out, 0, 1) == UpdateResult::inserted);
  CHECK(s.degree(0) == 1);
  CHECK(s.vertex_kind(0) == VertexKind::type1);

  fill(s, 0, 6, 2);
  CHECK(s.degree(0) == 7);
  CHECK(s.vertex_kind(0) == VertexKind::type1);
  CHECK(s.pool_stats().bytes_in_use == 0);

  s.insert_half(Side::out, 0, 8);
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  CHECK(s.capacity(Side::out, 0) == 8);
  CHECK(s.counters().type1_to_type2 == 1);
  CHECK(s.counters().edges_copied == 7);
  CHECK(s.hash_slots(Side::out, 0) == 0);

  fill(s, 0, 24, 9);  // deg 32
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  CHECK(s.capacity(Side::out, 0) == 32);

  s.insert_half(Side::out, 0, 33);
  CHECK(s.vertex_kind(0) == VertexKind::type3);
  CHECK(s.capacity(Side::out, 0) == 64);
  CHECK(s.hash_slots(Side::out, 0) == 128);
  CHECK(s.counters().type2_to_type3 == 1);

  fill(s, 0, 7, 34);
  CHECK(s.degree(0) == 40);
  CHECK(s.vertex_kind(0) == VertexKind::type3);
  CHECK(nbr_set(s, 0).size() == 40);
  CHECK(s.check_invariants(Side::out, 0).empty());
}

TEST_CASE("weighted thresholds (th0 = 3)") {
  WeightedGraphStore s(weighted(), 50);
  CHECK(s.th0() == 3);
  for (VertexId i = 1; i <= 3; ++i) s.insert_half(Side::out, 0, i, i * 10);
  CHECK(s.vertex_kind(0) == VertexKind::type1);
  s.insert_half(Side::out, 0, 4, 40);
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  CHECK(s.capacity(Side::out, 0) == 4);
  for (VertexId i = 1; i <= 4; ++i) CHECK(s.find_edge(Side::out, 0, i) == i * 10);
}

TEST_CASE("duplicate insert only updates the property") {
  for (VertexId deg : {3, 20, 45}) {
    WeightedGraphStore s(weighted(), 100);
    for (VertexId i = 1; i <= deg; ++i) s.insert_half(Side::out, 0, i, 1);
    const auto kind = s.vertex_kind(0);
    const auto cap = s.capacity(Side::out, 0);
    const auto mem = s.memory_bytes();
    CHECK(s.insert_half(Side::out, 0, deg, 99) == UpdateResult::updated);
    CHECK(s.degree(0) == deg);
    CHECK(s.vertex_kind(0) == kind);
    CHECK(s.capacity(Side::out, 0) == cap);
    CHECK(s.memory_bytes() == mem);
    CHECK(s.find_edge(Side::out, 0, deg) == 99u);
  }
  // at an exact threshold a duplicate must not trigger the upgrade
  GraphStore u(unweighted(), 100);
  fill(u, 0, 7);
  CHECK(u.insert_half(Side::out, 0, 7) == UpdateResult::updated);
  CHECK(u.vertex_kind(0) == VertexKind::type1);
  fill(u, 0, 25, 8);  // deg 32, cap 32
  CHECK(u.insert_half(Side::out, 0, 32) == UpdateResult::updated);
  CHECK(u.vertex_kind(0) == VertexKind::type2);
  CHECK(u.capacity(Side::out, 0) == 32);
}

TEST_CASE("delete of a missing edge changes nothing") {
  GraphStore s(unweighted(), 100);
  fill(s, 0, 40);
  const auto before = nbr_set(s, 0);
  const auto mem = s.memory_bytes();
  CHECK(s.delete_half(Side::out, 0, 77) == DeleteResult::absent);
  CHECK(nbr_set(s, 0) == before);
  CHECK(s.memory_bytes() == mem);
  CHECK(s.tombstones(Side::out, 0) == 0);
  CHECK(s.delete_half(Side::out, 5, 1) == DeleteResult::absent);
}

TEST_CASE("quarter-capacity shrink: Type2 cap 16 deg 5 -> cap 8") {
  WeightedGraphStore s(weighted(), 100);
  for (VertexId i = 1; i <= 9; ++i) s.insert_half(Side::out, 0, i, i);
  CHECK(s.capacity(Side::out, 0) == 16);
  for (VertexId i = 9; i >= 6; --i) s.delete_half(Side::out, 0, i);
  REQUIRE(s.degree(0) == 5);
  CHECK(s.capacity(Side::out, 0) == 16);
  s.delete_half(Side::out, 0, 3);
  CHECK(s.degree(0) == 4);
  CHECK(s.capacity(Side::out, 0) == 8);
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  CHECK(nbr_set(s, 0) == std::set<VertexId>{1, 2, 4, 5});
  for (VertexId i : {1, 2, 4, 5}) CHECK(s.find_edge(Side::out, 0, i) == i);
  CHECK(s.counters().shrinks == 1);
}

TEST_CASE("Type3 -> Type2 at deg th1") {
  GraphStore s(unweighted(), 100);
  fill(s, 0, 33);
  CHECK(s.vertex_kind(0) == VertexKind::type3);
  s.delete_half(Side::out, 0, 17);
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  CHECK(s.hash_slots(Side::out, 0) == 0);
  CHECK(s.capacity(Side::out, 0) == 32);
  CHECK(s.counters().type3_to_type2 == 1);
  for (VertexId i = 1; i <= 33; ++i) CHECK(s.find_edge(Side::out, 0, i).has_value() == (i != 17));
  CHECK(s.check_invariants(Side::out, 0).empty());
}

TEST_CASE("downgrade wins when cap/4 == th1") {
  GraphStore s(unweighted(), 200);
  fill(s, 0, 65);
  CHECK(s.capacity(Side::out, 0) == 128);
  for (VertexId i = 65; i > 32; --i) s.delete_half(Side::out, 0, i);
  CHECK(s.degree(0) == 32);
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  CHECK(s.capacity(Side::out, 0) == 64);
  CHECK(s.check_invariants(Side::out, 0).empty());
}

TEST_CASE("Type2 -> Type1 at deg th0 copies edges inline") {
  GraphStore s(unweighted(), 100);
  fill(s, 0, 9);
  CHECK(s.pool_stats().bytes_in_use > 0);
  s.delete_half(Side::out, 0, 1);
  CHECK(s.vertex_kind(0) == VertexKind::type2);
  s.delete_half(Side::out, 0, 5);
  CHECK(s.degree(0) == 7);
  CHECK(s.vertex_kind(0) == VertexKind::type1);
  CHECK(s.pool_stats().bytes_in_use == 0);
  CHECK(nbr_set(s, 0) == std::set<VertexId>{2, 3, 4, 6, 7, 8, 9});
  const auto* base = reinterpret_cast<const std::byte*>(s.neighbors(0).data());
  CHECK(base == s.record_address(Side::out, 0) + 8);
}

TEST_CASE("neighbors stay contiguous after deleting from the middle") {
  GraphStore s(unweighted(), 100);
  fill(s, 0, 50);
  s.delete_half(Side::out, 0, 20);
  const auto nb = s.neighbors(0);
  CHECK(nb.size() == 49);
  std::set<VertexId> got;
  for (const auto& e : nb) got.insert(e.dst);
  CHECK(got.size() == 49);
  CHECK(got.count(20) == 0);
}

TEST_CASE("undirected and directed edge halves") {
  GraphStore u(unweighted(), 10);
  CHECK(u.insert_edge(1, 2) == UpdateResult::inserted);
  CHECK(u.insert_edge(2, 1) == UpdateResult::updated);
  CHECK(nbr_set(u, 1) == std::set<VertexId>{2});
  CHECK(nbr_set(u, 2) == std::set<VertexId>{1});
  u.insert_edge(3, 3);
  CHECK(u.degree(3) == 1);
  CHECK(u.delete_edge(3, 3) == DeleteResult::deleted);
  CHECK(u.degree(3) == 0);

  Config c = unweighted();
  c.directed = true;
  GraphStore d(c, 10);
  d.insert_edge(1, 2);
  d.insert_edge(3, 2);
  CHECK(d.degree(2) == 0);
  CHECK(d.degree(Side::in, 2) == 2);
  CHECK(nbr_set(d, 2, Side::in) == std::set<VertexId>{1, 3});
  CHECK(d.in_neighbors(2).size() == 2);
  CHECK(d.delete_edge(1, 2) == DeleteResult::deleted);
  CHECK(nbr_set(d, 2, Side::in) == std::set<VertexId>{3});
  CHECK(d.delete_edge(1, 2) == DeleteResult::absent);
}

TEST_CASE("resize copies stay within 4n for a single growing vertex") {
  GraphStore s(unweighted(), 20001);
  const std::uint64_t n = 20000;
  for (VertexId i = 1; i <= n; ++i) s.insert_half(Side::out, 0, i);
  CHECK(s.counters().edges_copied <= 4 * n);
  CHECK(s.check_invariants(Side::out, 0).empty());
}

TEST_CASE("Type3 insert touches meta, one hash line and one edge line") {
  GraphStore s(unweighted(), 5000);
  fill(s, 0, 40);
  AccessTrace trace;
  s.set_trace(&trace);
  int checked = 0;
  for (VertexId nbr = 100; nbr < 4000; ++nbr) {
    const auto cap = s.capacity(Side::out, 0);
    const bool resizes = s.degree(0) == cap;
    s.reset_counters();
    trace.reset();
    s.insert_half(Side::out, 0, nbr);
    const auto& h = s.counters().probes.insert;
    if (resizes || h.total_distance() > 8) continue;
    REQUIRE(trace.meta_lines.size() == 1);
    REQUIRE(trace.hash_lines.size() == 1);
    REQUIRE(trace.edge_lines.size() == 1);
    ++checked;
  }
  s.set_trace(nullptr);
  CHECK(checked > 3000);
}

TEST_CASE("tombstone pressure rebuilds in place") {
  GraphStore s(unweighted(), 2000);
  fill(s, 0, 60);  // Type3, cap 64, 128 slots
  std::mt19937_64 rng(5);
  std::set<VertexId> model;
  for (VertexId i = 1; i <= 60; ++i) model.insert(i);
  for (int round = 0; round < 3000; ++round) {
    // keep deg between 40 and 60 so the capacity stays put
    if (model.size() > 40 && (rng() % 2 || model.size() == 60)) {
      auto it = model.begin();
      std::advance(it, rng() % model.size());
      REQUIRE(s.delete_half(Side::out, 0, *it) == DeleteResult::deleted);
      model.erase(it);
    } else {
      VertexId v;
      do v = 1 + rng() % 1999; while (model.count(v));
      REQUIRE(s.insert_half(Side::out, 0, v) == UpdateResult::inserted);
      model.insert(v);
    }
    REQUIRE(s.check_invariants(Side::out, 0).empty());
  }
  CHECK(s.counters().tombstone_rebuilds > 0);
  CHECK(nbr_set(s, 0) == model);
}

TEST_CASE("owners and pools") {
  Config c = unweighted();
  c.partition_size = 8;
  GraphStore s(c, 64, 4);
  CHECK(s.num_owners() == 4);
  for (VertexId v = 0; v < 64; ++v) CHECK(s.owner_of(v) == partition_of(v, 4, 8));
}

TEST_CASE("random traces match the map model across all three kinds") {
  for (bool is_weighted : {false, true}) {
    for (bool directed : {false, true}) {
      for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        Config c = is_weighted ? weighted(16) : unweighted(16);
        c.directed = directed;
        const std::uint64_t n = 60;
        oracle::ModelGraph model(n, directed);
        std::mt19937_64 rng(seed * 7 + directed + 2 * is_weighted);
        auto run = [&](auto& s) {
          for (int op = 0; op < 20000; ++op) {
            // skewed endpoints so a few vertices reach Type3
            const VertexId a = rng() % 4 == 0 ? rng() % 3 : rng() % n;
            const VertexId b = rng() % n;
            if (rng() % 5 < 3) {
              const std::uint64_t w = 1 + rng() % 50;
              const bool fresh = model.insert(a, b, is_weighted ? w : 1);
              REQUIRE(s.insert_edge(a, b, w) == (fresh ? UpdateResult::inserted : UpdateResult::updated));
            } else {
              const bool had = model.erase(a, b);
              REQUIRE(s.delete_edge(a, b) == (had ? DeleteResult::deleted : DeleteResult::absent));
            }
            for (VertexId v : {a, b}) {
              REQUIRE(s.check_invariants(Side::out, v) == "");
              if (directed) REQUIRE(s.check_invariants(Side::in, v) == "");
            }
          }
          for (VertexId v = 0; v < n; ++v) {
            std::map<VertexId, std::uint64_t> got;
            for (const auto& e : s.neighbors(v)) got[e.dst] = edge_prop(e);
            REQUIRE(got == model.out[v]);
            for (const auto& [d, p] : model.out[v]) REQUIRE(s.find_edge(Side::out, v, d) == p);
            if (directed) {
              std::map<VertexId, std::uint64_t> in;
              for (const auto& e : s.in_neighbors(v)) in[e.dst] = edge_prop(e);
              REQUIRE(in == model.in[v]);
            }
          }
        };
        if (is_weighted) {
          WeightedGraphStore s(c, n);
          run(s);
        } else {
          GraphStore s(c, n);
          run(s);
        }
      }
    }
  }
}
