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

// Open-addressing hash table whose probe sequence exhausts all slots of one
// line before jumping (by double hashing) to another line.
//
// Slot i of a key is
//
//   N * h1(key, i / N) + h2(key, i % N)
//   h1(k, x) = (h3(k) + x * h4(k)) mod M
//   h2(k, x) = (k + x) mod N
//   h3(k)    = (A*k mod 2^w) >> (w - m)
//   h4(k)    = ((A*k mod 2^w) >> (w - 2m)) | 1
//
// with M lines of N slots, m = log2(M), both powers of two. h4 is odd, so
// h1 visits every line once in the first M steps.
//
// Memory layout: one line is 16 words, 8 keys followed by their 8 values, so
// a line is a 128-byte aligned block and probing reads only the key half.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>

#include "tango/core.hpp"
#include "tango/mempool.hpp"

namespace tango {

inline constexpr std::uint64_t kEmptyKey = ~std::uint64_t{0};
inline constexpr std::uint64_t kTombstoneKey = ~std::uint64_t{0} - 1;
inline constexpr unsigned kSlotsPerLineLog2 = 3;
inline constexpr std::uint64_t kSlotsPerLine = std::uint64_t{1} << kSlotsPerLineLog2;
inline constexpr std::uint64_t kWordsPerLine = 2 * kSlotsPerLine;
inline constexpr std::uint64_t kLineBytes = kWordsPerLine * sizeof(std::uint64_t);

constexpr bool is_reserved_key(std::uint64_t key) noexcept { return key >= kTombstoneKey; }

/// Probe index -> slot index using shifts and masks only. Requires 2*log_m <= w
/// and 1 <= w <= 64.
constexpr std::uint64_t hash_probe_log2(std::uint64_t key, std::uint64_t i, unsigned log_m,
                                        unsigned log_n, std::uint64_t multiplier,
                                        unsigned w) noexcept {
  const std::uint64_t word_mask = w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
  const std::uint64_t y = (key * multiplier) & word_mask;
  std::uint64_t h1 = 0;
  if (log_m != 0) {
    const std::uint64_t h3 = y >> (w - log_m);
    const std::uint64_t h4 = (y >> (w - 2 * log_m)) | 1;
    h1 = (h3 + (i >> log_n) * h4) & ((std::uint64_t{1} << log_m) - 1);
  }
  const std::uint64_t h2 = (key + i) & ((std::uint64_t{1} << log_n) - 1);
  return (h1 << log_n) + h2;
}

/// Same as hash_probe_log2 but with M and N given as counts (powers of two).
constexpr std::uint64_t hash_probe(std::uint64_t key, std::uint64_t i, std::uint64_t lines,
                                   std::uint64_t slots_per_line, std::uint64_t multiplier,
                                   unsigned w) noexcept {
  return hash_probe_log2(key, i, static_cast<unsigned>(std::countr_zero(lines)),
                         static_cast<unsigned>(std::countr_zero(slots_per_line)), multiplier, w);
}

// Histogram of probe distances (number of slots inspected per operation).
class ProbeHistogram {
 public:
  static constexpr std::size_t kMaxTracked = 64;

  void record(std::uint64_t distance) noexcept {
    ++counts_[distance > kMaxTracked ? kMaxTracked + 1 : distance];
    ++samples_;
    total_ += distance;
  }
  void merge(const ProbeHistogram& other) noexcept {
    for (std::size_t i = 0; i < counts_.size(); ++i) counts_[i] += other.counts_[i];
    samples_ += other.samples_;
    total_ += other.total_;
  }
  void reset() noexcept { *this = ProbeHistogram{}; }

  std::uint64_t samples() const noexcept { return samples_; }
  std::uint64_t total_distance() const noexcept { return total_; }
  // counts for distance d (1..kMaxTracked); d == kMaxTracked+1 collects everything larger.
  std::uint64_t count(std::size_t distance) const noexcept {
    return distance < counts_.size() ? counts_[distance] : 0;
  }
  double mean() const noexcept {
    return samples_ == 0 ? 0.0 : static_cast<double>(total_) / static_cast<double>(samples_);
  }
  double fraction_at_most(std::uint64_t distance) const noexcept;

 private:
  std::array<std::uint64_t, kMaxTracked + 2> counts_{};
  std::uint64_t samples_ = 0;
  std::uint64_t total_ = 0;
};

struct ProbeStats {
  ProbeHistogram insert;
  ProbeHistogram find;  // find and remove

  void merge(const ProbeStats& other) noexcept {
    insert.merge(other.insert);
    find.merge(other.find);
  }
  void reset() noexcept {
    insert.reset();
    find.reset();
  }
};

// Records which cache lines an operation touched. Test instrumentation only.
struct AccessTrace {
  std::set<std::uintptr_t> meta_lines;
  std::set<std::uintptr_t> hash_lines;
  std::set<std::uintptr_t> edge_lines;

  void reset() {
    meta_lines.clear();
    hash_lines.clear();
    edge_lines.clear();
  }
};

// Non-owning view over a slot array of (kSlotsPerLine << log_m) slots.
class SlotArray {
 public:
  struct Probe {
    std::uint64_t slot = 0;
    std::uint32_t distance = 0;
    bool found = false;
    bool on_tombstone = false;  // probe_insert: target slot holds a tombstone
  };

  SlotArray(std::uint64_t* words, unsigned log_m, std::uint64_t multiplier) noexcept
      : words_(words), log_m_(log_m), multiplier_(multiplier) {}

  static constexpr std::size_t bytes_for(std::uint64_t capacity_slots) noexcept {
    return static_cast<std::size_t>(capacity_slots * 2 * sizeof(std::uint64_t));
  }

  std::uint64_t capacity() const noexcept { return kSlotsPerLine << log_m_; }
  unsigned log_lines() const noexcept { return log_m_; }
  std::uint64_t* words() const noexcept { return words_; }

  std::uint64_t& key(std::uint64_t slot) const noexcept { return words_[key_index(slot)]; }
  std::uint64_t& value(std::uint64_t slot) const noexcept {
    return words_[key_index(slot) + kSlotsPerLine];
  }

  // Marks every slot EMPTY.
  void clear() const noexcept;

  // found: slot holds key. Otherwise slot is where key belongs: the first
  // tombstone seen, else the EMPTY slot that ended the search. If neither
  // exists (a full table) distance == capacity() and slot is meaningless.
  Probe probe_insert(std::uint64_t key, AccessTrace* trace = nullptr) const noexcept;

  // found: slot holds key; otherwise the search ended at EMPTY or exhausted the table.
  Probe probe_find(std::uint64_t key, AccessTrace* trace = nullptr) const noexcept;

 private:
  static constexpr std::uint64_t key_index(std::uint64_t slot) noexcept {
    return (slot >> kSlotsPerLineLog2) * kWordsPerLine + (slot & (kSlotsPerLine - 1));
  }

  std::uint64_t* words_;
  unsigned log_m_;
  std::uint64_t multiplier_;
};

enum class InsertOutcome { inserted, updated };
enum class RemoveOutcome { removed, absent };

// Owning table with pool-backed storage and a 0.5 maximum load factor.
class CfhTable {
 public:
  // capacity_slots: power of two >= kSlotsPerLine.
  CfhTable(MemoryPool& pool, std::uint64_t capacity_slots,
           std::uint64_t multiplier = kHashConstant64);
  ~CfhTable();

  CfhTable(CfhTable&& other) noexcept;
  CfhTable& operator=(CfhTable&& other) noexcept;
  CfhTable(const CfhTable&) = delete;
  CfhTable& operator=(const CfhTable&) = delete;

  std::optional<std::uint64_t> find(VertexId key);

  // Throws Errc::capacity_exceeded when a new key would push the load factor
  // above 0.5. Rebuilds in place first if tombstones are what is in the way.
  InsertOutcome insert(VertexId key, std::uint64_t value);

  RemoveOutcome remove(VertexId key);

  // Re-inserts every live pair into a fresh array; drops all tombstones.
  void rebuild(std::uint64_t new_capacity_slots);

  std::uint64_t capacity_slots() const noexcept { return kSlotsPerLine << log_m_; }
  std::uint64_t lines() const noexcept { return std::uint64_t{1} << log_m_; }
  static constexpr std::uint64_t slots_per_line() noexcept { return kSlotsPerLine; }
  std::uint64_t live_count() const noexcept { return live_; }
  std::uint64_t tombstone_count() const noexcept { return tombstones_; }
  std::uint64_t multiplier() const noexcept { return multiplier_; }
  double load_factor() const noexcept {
    return static_cast<double>(live_) / static_cast<double>(capacity_slots());
  }
  const std::uint64_t* data() const noexcept { return words_; }

  const ProbeStats& probe_stats() const noexcept { return stats_; }
  void reset_probe_stats() noexcept { stats_.reset(); }

 private:
  SlotArray slots() const noexcept { return SlotArray(words_, log_m_, multiplier_); }
  static void check_key(VertexId key);
  void release() noexcept;

  MemoryPool* pool_;
  std::uint64_t* words_ = nullptr;
  unsigned log_m_ = 0;
  std::uint64_t multiplier_;
  std::uint64_t live_ = 0;
  std::uint64_t tombstones_ = 0;
  ProbeStats stats_;
};

}  // namespace tango
