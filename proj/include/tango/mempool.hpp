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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "tango/core.hpp"

namespace tango {

struct PoolStats {
  std::uint64_t bytes_in_use = 0;
  std::uint64_t bytes_reserved = 0;
};

// Contract violations seen by the debug shadow allocator.
struct ShadowReport {
  std::uint64_t overlaps = 0;
  std::uint64_t double_frees = 0;
  std::uint64_t size_mismatches = 0;
  std::uint64_t foreign_frees = 0;

  bool clean() const noexcept {
    return overlaps == 0 && double_frees == 0 && size_mismatches == 0 && foreign_frees == 0;
  }
};

// Single-owner allocator with power-of-two size classes and intrusive free
// lists. Chunks are carved from page-aligned blocks that are only returned to
// the system when the pool is destroyed. Not thread-safe: one pool per worker.
class MemoryPool {
 public:
  static constexpr unsigned kMinClass = 3;
  static constexpr unsigned kMaxClass = 48;
  static constexpr std::size_t kMaxRequest = std::size_t{1} << kMaxClass;

  explicit MemoryPool(std::size_t block_bytes = kDefaultBlockBytes, bool shadow = false);
  ~MemoryPool();

  MemoryPool(const MemoryPool&) = delete;
  MemoryPool& operator=(const MemoryPool&) = delete;

  // Returns a chunk of chunk_bytes(sz) bytes. Throws Errc::invalid_argument for
  // sz == 0 or sz > kMaxRequest and Errc::out_of_memory when the system
  // allocator fails.
  [[nodiscard]] void* allocate(std::size_t sz);

  // sz must map to the same class as the allocate() call that produced chunk.
  void deallocate(void* chunk, std::size_t sz) noexcept;

  PoolStats stats() const noexcept { return stats_; }
  const ShadowReport& shadow_report() const noexcept { return shadow_; }
  bool shadow_enabled() const noexcept { return shadow_enabled_; }
  std::size_t block_bytes() const noexcept { return block_bytes_; }
  std::size_t block_count() const noexcept { return blocks_.size(); }

  // k = ceil(log2(max(sz, 8))), via count-leading-zeros.
  static constexpr unsigned size_class(std::size_t sz) noexcept {
    const std::uint64_t clamped = sz < 8 ? 8 : sz;
    return static_cast<unsigned>(64 - std::countl_zero(std::uint64_t{clamped - 1}));
  }
  static constexpr std::size_t chunk_bytes(std::size_t sz) noexcept {
    return std::size_t{1} << size_class(sz);
  }

 private:
  struct Block {
    void* base;
    std::size_t bytes;
  };
  enum class ShadowState : std::uint8_t { live, freed };
  struct ShadowEntry {
    std::size_t bytes;
    ShadowState state;
  };

  void refill(unsigned k);
  void shadow_on_allocate(void* chunk, std::size_t bytes);
  bool shadow_on_deallocate(void* chunk, std::size_t bytes);

  std::array<void*, kMaxClass + 1> free_heads_{};
  std::vector<Block> blocks_;
  std::size_t block_bytes_;
  PoolStats stats_;

  bool shadow_enabled_;
  ShadowReport shadow_;
  std::map<std::uintptr_t, ShadowEntry> shadow_chunks_;
};

}  // namespace tango
