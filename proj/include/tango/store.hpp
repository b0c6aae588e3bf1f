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

// Degree-adaptive adjacency storage.
//
// Every vertex owns one cache-line-sized metadata record in a page-aligned
// array. The first word is the degree. Depending on it:
//
//   Type1  deg <= th0        edges live inline in the record itself
//   Type2  th0 < deg <= th1  record holds {cap, edge array}
//   Type3  deg > th1         record holds {cap, edge array, hash table,
//                            tombstones}; the table maps dst -> array index
//
// Record words for Type2/Type3: [0] deg, [1] cap, [2] edge array,
// [3] hash table, [4] tombstone count. The table always has 2*cap slots.
//
// Valid edges always occupy indices [0, deg) of their array; deletions move
// the last edge into the hole. Traversal never reads the hash table.
//
// Threading: vertex v is owned by partition_of(v, owners, partition_size).
// Update operations on v may only run on v's owner; each owner has a private
// MemoryPool and counter block. Reads are safe while no update is in flight.

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tango/cfhash.hpp"
#include "tango/core.hpp"
#include "tango/edges.hpp"
#include "tango/mempool.hpp"

namespace tango {

struct StoreCounters {
  std::uint64_t edges_copied = 0;        // by grow/shrink/type switches
  std::uint64_t rehash_inserts = 0;      // pairs reinserted by table rebuilds
  std::uint64_t grows = 0;               // within-type capacity doubling
  std::uint64_t shrinks = 0;             // within-type capacity halving
  std::uint64_t type1_to_type2 = 0;
  std::uint64_t type2_to_type3 = 0;
  std::uint64_t type3_to_type2 = 0;
  std::uint64_t type2_to_type1 = 0;
  std::uint64_t tombstone_rebuilds = 0;
  std::uint64_t hash_lookups = 0;
  ProbeStats probes;

  void merge(const StoreCounters& o) noexcept;
};

namespace detail {

struct FreeDeleter {
  void operator()(void* p) const noexcept { std::free(p); }
};
using AlignedBytes = std::unique_ptr<std::byte, FreeDeleter>;

// Zero-filled, page-aligned allocation.
AlignedBytes allocate_zeroed_pages(std::size_t bytes);

}  // namespace detail

template <StoredEdge EdgeT>
class HybridStore {
 public:
  using edge_type = EdgeT;

  // num_owners: number of worker partitions (and pools). Throws
  // Errc::invalid_config if config is invalid or disagrees with EdgeT.
  HybridStore(const Config& config, std::uint64_t num_vertices, unsigned num_owners = 1);

  HybridStore(HybridStore&&) noexcept = default;
  HybridStore& operator=(HybridStore&&) noexcept = default;
  HybridStore(const HybridStore&) = delete;
  HybridStore& operator=(const HybridStore&) = delete;

  // Whole logical edge, both adjacency sides. Single-threaded convenience.
  UpdateResult insert_edge(VertexId src, VertexId dst, std::uint64_t prop = 1);
  DeleteResult delete_edge(VertexId src, VertexId dst);

  // One adjacency side: v's list on `side` gains/loses nbr. Must run on v's owner.
  UpdateResult insert_half(Side side, VertexId v, VertexId nbr, std::uint64_t prop = 1);
  DeleteResult delete_half(Side side, VertexId v, VertexId nbr);

  std::span<const EdgeT> neighbors(VertexId v) const noexcept { return neighbors(Side::out, v); }
  std::span<const EdgeT> in_neighbors(VertexId v) const noexcept {
    return neighbors(directed_ ? Side::in : Side::out, v);
  }
  std::span<const EdgeT> neighbors(Side side, VertexId v) const noexcept;

  std::uint64_t degree(VertexId v) const { return degree(Side::out, v); }
  std::uint64_t degree(Side side, VertexId v) const;
  VertexKind vertex_kind(VertexId v) const { return vertex_kind(Side::out, v); }
  VertexKind vertex_kind(Side side, VertexId v) const;
  // Edge-array capacity; th0 (the inline slot count) for Type1.
  std::uint64_t capacity(Side side, VertexId v) const;
  // Hash-table slot count; 0 unless Type3.
  std::uint64_t hash_slots(Side side, VertexId v) const;
  std::uint64_t tombstones(Side side, VertexId v) const;

  // Property of edge v->nbr on `side`, if present.
  std::optional<std::uint64_t> find_edge(Side side, VertexId v, VertexId nbr) const;

  // Metadata arrays + vertex property array + live pool chunks.
  std::uint64_t memory_bytes() const noexcept;
  PoolStats pool_stats() const noexcept;

  std::uint64_t num_vertices() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  const Config& config() const noexcept { return config_; }
  std::uint64_t th0() const noexcept { return th0_; }
  std::uint64_t th1() const noexcept { return th1_; }
  unsigned num_owners() const noexcept { return static_cast<unsigned>(pools_.size()); }
  unsigned owner_of(VertexId v) const noexcept { return static_cast<unsigned>(part_(v)); }
  const std::byte* record_address(Side side, VertexId v) const noexcept { return record(side, v); }

  std::span<std::uint64_t> vertex_props() noexcept {
    return {reinterpret_cast<std::uint64_t*>(vprop_.get()), n_};
  }

  StoreCounters counters() const;
  void reset_counters();

  // Returns a description of the first violated record invariant, or "".
  std::string check_invariants(Side side, VertexId v) const;

  void set_trace(AccessTrace* trace) noexcept { trace_ = trace; }

 private:
  struct alignas(64) PaddedCounters {
    StoreCounters c;
  };

  enum Word : unsigned { kDeg = 0, kCap = 1, kEdges = 2, kTable = 3, kTombs = 4 };

  std::byte* record(Side side, VertexId v) const noexcept {
    return meta_[static_cast<unsigned>(side)].get() + v * line_;
  }
  static std::uint64_t& word(std::byte* r, unsigned i) noexcept {
    return reinterpret_cast<std::uint64_t*>(r)[i];
  }
  static EdgeT* inline_edges(std::byte* r) noexcept {
    return reinterpret_cast<EdgeT*>(r + sizeof(std::uint64_t));
  }
  static EdgeT* heap_edges(std::byte* r) noexcept {
    return reinterpret_cast<EdgeT*>(static_cast<std::uintptr_t>(word(r, kEdges)));
  }
  static std::uint64_t* table_words(std::byte* r) noexcept {
    return reinterpret_cast<std::uint64_t*>(static_cast<std::uintptr_t>(word(r, kTable)));
  }
  static unsigned table_log_lines(std::uint64_t cap) noexcept {
    // 2*cap slots, kSlotsPerLine per line.
    return static_cast<unsigned>(std::countr_zero(cap) + 1 - kSlotsPerLineLog2);
  }
  SlotArray table_of(std::byte* r) const noexcept {
    return SlotArray(table_words(r), table_log_lines(word(r, kCap)), config_.hash_constant);
  }

  void check_vertex(VertexId v) const;
  void trace_meta(const std::byte* r) const;
  void trace_edge(const EdgeT* e) const;

  EdgeT* alloc_edges(MemoryPool& pool, std::uint64_t cap) const;
  static void free_edges(MemoryPool& pool, EdgeT* edges, std::uint64_t cap) noexcept;
  std::uint64_t* build_table(MemoryPool& pool, const EdgeT* edges, std::uint64_t deg,
                             std::uint64_t cap, StoreCounters& c) const;
  static void free_table(MemoryPool& pool, std::uint64_t* table, std::uint64_t cap) noexcept;

  // Moves the heap edge array to new_cap (and rebuilds the table if Type3).
  void resize_heap(std::byte* r, std::uint64_t new_cap, bool with_table, MemoryPool& pool,
                   StoreCounters& c);

  Config config_;
  std::uint64_t n_;
  bool directed_;
  std::uint64_t line_;
  std::uint64_t th0_;
  std::uint64_t th1_;
  std::uint64_t type2_min_cap_;
  Partitioner part_;
  detail::AlignedBytes meta_[2];
  detail::AlignedBytes vprop_;
  std::vector<std::unique_ptr<MemoryPool>> pools_;
  std::unique_ptr<PaddedCounters[]> counters_;
  AccessTrace* trace_ = nullptr;
};

using GraphStore = HybridStore<PlainEdge>;
using WeightedGraphStore = HybridStore<WeightedEdge>;

// ---------------------------------------------------------------------------
// Implementation

template <StoredEdge EdgeT>
HybridStore<EdgeT>::HybridStore(const Config& config, std::uint64_t num_vertices,
                                unsigned num_owners)
    : config_(config),
      n_(num_vertices),
      directed_(config.directed),
      line_(config.cache_line_bytes),
      th0_(0),
      th1_(config.th1),
      type2_min_cap_(0),
      part_(num_owners == 0 ? 1 : num_owners, config.partition_size) {
  config_.validate();
  if (config_.weighted != kIsWeighted<EdgeT>) {
    throw Error(Errc::invalid_config, "HybridStore: config.weighted does not match edge layout");
  }
  if (num_vertices > kMaxVertexId) {
    throw Error(Errc::invalid_config, "HybridStore: too many vertices");
  }
  th0_ = config_.th0();
  type2_min_cap_ = std::bit_ceil(th0_ + 1);
  meta_[0] = detail::allocate_zeroed_pages(n_ * line_);
  if (directed_) meta_[1] = detail::allocate_zeroed_pages(n_ * line_);
  vprop_ = detail::allocate_zeroed_pages(n_ * sizeof(std::uint64_t));
  const unsigned owners = num_owners == 0 ? 1 : num_owners;
  pools_.reserve(owners);
  for (unsigned i = 0; i < owners; ++i) {
    pools_.push_back(std::make_unique<MemoryPool>(config_.block_bytes));
  }
  counters_ = std::make_unique<PaddedCounters[]>(owners);
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
  }
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::trace_meta(const std::byte* r) const {
  if (trace_ != nullptr) [[unlikely]] {
    trace_->meta_lines.insert(reinterpret_cast<std::uintptr_t>(r) & ~std::uintptr_t{63});
  }
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::trace_edge(const EdgeT* e) const {
  if (trace_ != nullptr) [[unlikely]] {
    trace_->edge_lines.insert(reinterpret_cast<std::uintptr_t>(e) & ~std::uintptr_t{63});
  }
}

template <StoredEdge EdgeT>
EdgeT* HybridStore<EdgeT>::alloc_edges(MemoryPool& pool, std::uint64_t cap) const {
  return static_cast<EdgeT*>(pool.allocate(cap * sizeof(EdgeT)));
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::free_edges(MemoryPool& pool, EdgeT* edges, std::uint64_t cap) noexcept {
  pool.deallocate(edges, cap * sizeof(EdgeT));
}

template <StoredEdge EdgeT>
std::uint64_t* HybridStore<EdgeT>::build_table(MemoryPool& pool, const EdgeT* edges,
                                               std::uint64_t deg, std::uint64_t cap,
                                               StoreCounters& c) const {
  const std::uint64_t slots = 2 * cap;
  auto* words = static_cast<std::uint64_t*>(pool.allocate(SlotArray::bytes_for(slots)));
  const SlotArray table(words, table_log_lines(cap), config_.hash_constant);
  table.clear();
  for (std::uint64_t j = 0; j < deg; ++j) {
    const auto probe = table.probe_insert(edges[j].dst);
    table.key(probe.slot) = edges[j].dst;
    table.value(probe.slot) = j;
  }
  c.rehash_inserts += deg;
  return words;
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::free_table(MemoryPool& pool, std::uint64_t* table,
                                    std::uint64_t cap) noexcept {
  pool.deallocate(table, SlotArray::bytes_for(2 * cap));
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::resize_heap(std::byte* r, std::uint64_t new_cap, bool with_table,
                                     MemoryPool& pool, StoreCounters& c) {
  const std::uint64_t deg = word(r, kDeg);
  const std::uint64_t old_cap = word(r, kCap);
  EdgeT* old_edges = heap_edges(r);
  EdgeT* fresh = alloc_edges(pool, new_cap);
  std::memcpy(fresh, old_edges, deg * sizeof(EdgeT));
  c.edges_copied += deg;
  free_edges(pool, old_edges, old_cap);
  if (std::uint64_t* old_table = table_words(r); old_table != nullptr) {
    free_table(pool, old_table, old_cap);
  }
  std::uint64_t* table = with_table ? build_table(pool, fresh, deg, new_cap, c) : nullptr;
  word(r, kCap) = new_cap;
  word(r, kEdges) = reinterpret_cast<std::uintptr_t>(fresh);
  word(r, kTable) = reinterpret_cast<std::uintptr_t>(table);
  word(r, kTombs) = 0;
}

template <StoredEdge EdgeT>
UpdateResult HybridStore<EdgeT>::insert_edge(VertexId src, VertexId dst, std::uint64_t prop) {
  check_vertex(src);
  check_vertex(dst);
  const UpdateResult result = insert_half(Side::out, src, dst, prop);
  if (directed_) {
    insert_half(Side::in, dst, src, prop);
  } else if (src != dst) {
    insert_half(Side::out, dst, src, prop);
  }
  return result;
}

template <StoredEdge EdgeT>
DeleteResult HybridStore<EdgeT>::delete_edge(VertexId src, VertexId dst) {
  check_vertex(src);
  check_vertex(dst);
  const DeleteResult result = delete_half(Side::out, src, dst);
  if (directed_) {
    delete_half(Side::in, dst, src);
  } else if (src != dst) {
    delete_half(Side::out, dst, src);
  }
  return result;
}

template <StoredEdge EdgeT>
UpdateResult HybridStore<EdgeT>::insert_half(Side side, VertexId v, VertexId nbr,
                                             std::uint64_t prop) {
  check_vertex(v);
  check_vertex(nbr);
  std::byte* r = record(side, v);
  trace_meta(r);
  const unsigned owner = owner_of(v);
  MemoryPool& pool = *pools_[owner];
  StoreCounters& c = counters_[owner].c;
  const std::uint64_t deg = word(r, kDeg);

  if (deg <= th0_) {
    EdgeT* edges = inline_edges(r);
    for (std::uint64_t i = 0; i < deg; ++i) {
      if (edges[i].dst == nbr) {
        set_edge_prop(edges[i], prop);
        return UpdateResult::updated;
      }
    }
    if (deg < th0_) {
      edges[deg] = make_edge<EdgeT>(nbr, prop);
      word(r, kDeg) = deg + 1;
      return UpdateResult::inserted;
    }
    // Type1 -> Type2. The inline slots are not pool memory; nothing to free.
    EdgeT* fresh = alloc_edges(pool, type2_min_cap_);
    std::memcpy(fresh, edges, deg * sizeof(EdgeT));
    c.edges_copied += deg;
    ++c.type1_to_type2;
    fresh[deg] = make_edge<EdgeT>(nbr, prop);
    trace_edge(fresh + deg);
    word(r, kCap) = type2_min_cap_;
    word(r, kEdges) = reinterpret_cast<std::uintptr_t>(fresh);
    word(r, kTable) = 0;
    word(r, kTombs) = 0;
    word(r, kDeg) = deg + 1;
    return UpdateResult::inserted;
  }

  if (deg <= th1_) {
    EdgeT* edges = heap_edges(r);
    for (std::uint64_t i = 0; i < deg; ++i) {
      if (edges[i].dst == nbr) {
        set_edge_prop(edges[i], prop);
        trace_edge(edges + i);
        return UpdateResult::updated;
      }
    }
    const std::uint64_t cap = word(r, kCap);
    if (deg == th1_) {
      resize_heap(r, cap * 2, true, pool, c);
      ++c.type2_to_type3;
      const SlotArray table = table_of(r);
      const auto probe = table.probe_insert(nbr);
      table.key(probe.slot) = nbr;
      table.value(probe.slot) = deg;
    } else if (deg == cap) {
      resize_heap(r, cap * 2, false, pool, c);
      ++c.grows;
    }
    EdgeT* dst = heap_edges(r) + deg;
    *dst = make_edge<EdgeT>(nbr, prop);
    trace_edge(dst);
    word(r, kDeg) = deg + 1;
    return UpdateResult::inserted;
  }

  // Type3
  SlotArray table = table_of(r);
  auto probe = table.probe_insert(nbr, trace_);
  ++c.hash_lookups;
  c.probes.insert.record(probe.distance);
  if (probe.found) {
    EdgeT* e = heap_edges(r) + table.value(probe.slot);
    set_edge_prop(*e, prop);
    trace_edge(e);
    return UpdateResult::updated;
  }
  const std::uint64_t cap = word(r, kCap);
  if (deg == cap) {
    resize_heap(r, cap * 2, true, pool, c);
    ++c.grows;
    table = table_of(r);
    probe = table.probe_insert(nbr);
  } else if (!probe.on_tombstone && deg + word(r, kTombs) + 1 > cap) {
    // live + tombstones would exceed half of the 2*cap slots
    resize_heap(r, cap, true, pool, c);
    ++c.tombstone_rebuilds;
    table = table_of(r);
    probe = table.probe_insert(nbr);
  }
  EdgeT* dst = heap_edges(r) + deg;
  *dst = make_edge<EdgeT>(nbr, prop);
  trace_edge(dst);
  table.key(probe.slot) = nbr;
  table.value(probe.slot) = deg;
  if (probe.on_tombstone) --word(r, kTombs);
  word(r, kDeg) = deg + 1;
  return UpdateResult::inserted;
}

template <StoredEdge EdgeT>
DeleteResult HybridStore<EdgeT>::delete_half(Side side, VertexId v, VertexId nbr) {
  check_vertex(v);
  check_vertex(nbr);
  std::byte* r = record(side, v);
  trace_meta(r);
  const unsigned owner = owner_of(v);
  MemoryPool& pool = *pools_[owner];
  StoreCounters& c = counters_[owner].c;
  const std::uint64_t deg = word(r, kDeg);

  if (deg <= th0_) {
    EdgeT* edges = inline_edges(r);
    for (std::uint64_t i = 0; i < deg; ++i) {
      if (edges[i].dst == nbr) {
        edges[i] = edges[deg - 1];
        word(r, kDeg) = deg - 1;
        return DeleteResult::deleted;
      }
    }
    return DeleteResult::absent;
  }

  const std::uint64_t cap = word(r, kCap);
  EdgeT* edges = heap_edges(r);
  const std::uint64_t last = deg - 1;

  if (deg <= th1_) {
    std::uint64_t found = deg;
    for (std::uint64_t i = 0; i < deg; ++i) {
      if (edges[i].dst == nbr) {
        found = i;
        break;
      }
    }
    if (found == deg) return DeleteResult::absent;
    edges[found] = edges[last];
    word(r, kDeg) = last;
    if (last == th0_) {
      // Type2 -> Type1: header words are overwritten by the inline copy.
      std::memcpy(inline_edges(r), edges, last * sizeof(EdgeT));
      c.edges_copied += last;
      ++c.type2_to_type1;
      free_edges(pool, edges, cap);
    } else if (last == cap / 4) {
      resize_heap(r, cap / 2, false, pool, c);
      ++c.shrinks;
    }
    return DeleteResult::deleted;
  }

  // Type3
  const SlotArray table = table_of(r);
  const auto probe = table.probe_find(nbr, trace_);
  ++c.hash_lookups;
  c.probes.find.record(probe.distance);
  if (!probe.found) return DeleteResult::absent;
  const std::uint64_t found = table.value(probe.slot);
  table.key(probe.slot) = kTombstoneKey;
  ++word(r, kTombs);
  if (found != last) {
    edges[found] = edges[last];
    const auto moved = table.probe_find(edges[found].dst);
    ++c.hash_lookups;
    table.value(moved.slot) = found;
  }
  word(r, kDeg) = last;
  if (last == th1_) {
    // Type3 -> Type2; takes precedence when cap/4 == th1 as well.
    resize_heap(r, cap / 2, false, pool, c);
    ++c.type3_to_type2;
  } else if (last == cap / 4) {
    resize_heap(r, cap / 2, true, pool, c);
    ++c.shrinks;
  }
  return DeleteResult::deleted;
}

template <StoredEdge EdgeT>
std::span<const EdgeT> HybridStore<EdgeT>::neighbors(Side side, VertexId v) const noexcept {
  assert(v < n_);
  std::byte* r = record(side, v);
  const std::uint64_t deg = word(r, kDeg);
  const EdgeT* edges = deg <= th0_ ? inline_edges(r) : heap_edges(r);
  return {edges, static_cast<std::size_t>(deg)};
}

template <StoredEdge EdgeT>
std::uint64_t HybridStore<EdgeT>::degree(Side side, VertexId v) const {
  check_vertex(v);
  return word(record(side, v), kDeg);
}

template <StoredEdge EdgeT>
VertexKind HybridStore<EdgeT>::vertex_kind(Side side, VertexId v) const {
  const std::uint64_t deg = degree(side, v);
  if (deg <= th0_) return VertexKind::type1;
  if (deg <= th1_) return VertexKind::type2;
  return VertexKind::type3;
}

template <StoredEdge EdgeT>
std::uint64_t HybridStore<EdgeT>::capacity(Side side, VertexId v) const {
  std::byte* r = record(side, v);
  return degree(side, v) <= th0_ ? th0_ : word(r, kCap);
}

template <StoredEdge EdgeT>
std::uint64_t HybridStore<EdgeT>::hash_slots(Side side, VertexId v) const {
  return vertex_kind(side, v) == VertexKind::type3 ? 2 * word(record(side, v), kCap) : 0;
}

template <StoredEdge EdgeT>
std::uint64_t HybridStore<EdgeT>::tombstones(Side side, VertexId v) const {
  return vertex_kind(side, v) == VertexKind::type3 ? word(record(side, v), kTombs) : 0;
}

template <StoredEdge EdgeT>
std::optional<std::uint64_t> HybridStore<EdgeT>::find_edge(Side side, VertexId v,
                                                           VertexId nbr) const {
  check_vertex(v);
  std::byte* r = record(side, v);
  const std::uint64_t deg = word(r, kDeg);
  if (deg > th1_) {
    const SlotArray table = table_of(r);
    const auto probe = table.probe_find(nbr);
    ++counters_[owner_of(v)].c.hash_lookups;
    if (!probe.found) return std::nullopt;
    return edge_prop(heap_edges(r)[table.value(probe.slot)]);
  }
  for (const EdgeT& e : neighbors(side, v)) {
    if (e.dst == nbr) return edge_prop(e);
  }
  return std::nullopt;
}

template <StoredEdge EdgeT>
std::uint64_t HybridStore<EdgeT>::memory_bytes() const noexcept {
  std::uint64_t bytes = n_ * line_ * (directed_ ? 2 : 1) + n_ * sizeof(std::uint64_t);
  for (const auto& pool : pools_) bytes += pool->stats().bytes_in_use;
  return bytes;
}

template <StoredEdge EdgeT>
PoolStats HybridStore<EdgeT>::pool_stats() const noexcept {
  PoolStats total;
  for (const auto& pool : pools_) {
    total.bytes_in_use += pool->stats().bytes_in_use;
    total.bytes_reserved += pool->stats().bytes_reserved;
  }
  return total;
}

template <StoredEdge EdgeT>
StoreCounters HybridStore<EdgeT>::counters() const {
  StoreCounters total;
  for (unsigned i = 0; i < num_owners(); ++i) total.merge(counters_[i].c);
  return total;
}

template <StoredEdge EdgeT>
void HybridStore<EdgeT>::reset_counters() {
  for (unsigned i = 0; i < num_owners(); ++i) counters_[i].c = StoreCounters{};
}

template <StoredEdge EdgeT>
std::string HybridStore<EdgeT>::check_invariants(Side side, VertexId v) const {
  check_vertex(v);
  std::byte* r = record(side, v);
  const std::uint64_t deg = word(r, kDeg);
  const auto edges = neighbors(side, v);
  std::vector<VertexId> dsts;
  dsts.reserve(edges.size());
  for (const EdgeT& e : edges) {
    if (e.dst >= n_) return "edge destination out of range";
    dsts.push_back(e.dst);
  }
  std::sort(dsts.begin(), dsts.end());
  if (std::adjacent_find(dsts.begin(), dsts.end()) != dsts.end()) return "duplicate edge";
  if (deg <= th0_) return {};

  const std::uint64_t cap = word(r, kCap);
  if (!std::has_single_bit(cap)) return "capacity is not a power of two";
  if (cap < type2_min_cap_) return "capacity below nextPow2(th0)";
  if (deg > cap) return "degree exceeds capacity";
  if (word(r, kEdges) == 0) return "missing edge array";
  if (deg <= th1_) {
    if (word(r, kTable) != 0) return "Type2 vertex holds a hash table";
    return {};
  }
  if (word(r, kTable) == 0) return "Type3 vertex without hash table";
  const SlotArray table = table_of(r);
  if (table.capacity() != 2 * cap) return "hash capacity is not twice the edge capacity";
  std::uint64_t live = 0;
  std::uint64_t tombs = 0;
  for (std::uint64_t s = 0; s < table.capacity(); ++s) {
    if (table.key(s) == kTombstoneKey) {
      ++tombs;
    } else if (table.key(s) != kEmptyKey) {
      ++live;
    }
  }
  if (live != deg) return "hash live count differs from degree";
  if (tombs != word(r, kTombs)) return "tombstone counter out of sync";
  if (live + tombs > table.capacity() / 2) return "hash load (live + tombstones) above 0.5";
  for (std::uint64_t j = 0; j < deg; ++j) {
    const auto probe = table.probe_find(edges[j].dst);
    if (!probe.found || table.value(probe.slot) != j) return "hash entry does not point at edge";
  }
  return {};
}

extern template class HybridStore<PlainEdge>;
extern template class HybridStore<WeightedEdge>;

}  // namespace tango
