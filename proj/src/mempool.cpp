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

#include "tango/mempool.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace tango {

namespace {

constexpr std::size_t kPageBytes = 4096;

void* load_next(void* chunk) noexcept {
  void* next;
  std::memcpy(&next, chunk, sizeof(next));
  return next;
}

void store_next(void* chunk, void* next) noexcept { std::memcpy(chunk, &next, sizeof(next)); }

}  // namespace

MemoryPool::MemoryPool(std::size_t block_bytes, bool shadow)
    : block_bytes_((block_bytes + kPageBytes - 1) / kPageBytes * kPageBytes),
      shadow_enabled_(shadow) {
  if (block_bytes_ == 0) block_bytes_ = kPageBytes;
}

MemoryPool::~MemoryPool() {
  for (const Block& b : blocks_) std::free(b.base);
}

void* MemoryPool::allocate(std::size_t sz) {
  if (sz == 0 || sz > kMaxRequest) {
    throw Error(Errc::invalid_argument,
                "MemoryPool::allocate: size " + std::to_string(sz) + " outside (0, 2^48]");
  }
  const unsigned k = size_class(sz);
  void* chunk = free_heads_[k];
  if (chunk == nullptr) {
    refill(k);
    chunk = free_heads_[k];
  }
  free_heads_[k] = load_next(chunk);
  const std::size_t bytes = std::size_t{1} << k;
  stats_.bytes_in_use += bytes;
  if (shadow_enabled_) shadow_on_allocate(chunk, bytes);
  return chunk;
}

void MemoryPool::deallocate(void* chunk, std::size_t sz) noexcept {
  if (chunk == nullptr) return;
  const unsigned k = size_class(sz);
  const std::size_t bytes = std::size_t{1} << k;
  if (shadow_enabled_ && !shadow_on_deallocate(chunk, bytes)) return;
  store_next(chunk, free_heads_[k]);
  free_heads_[k] = chunk;
  stats_.bytes_in_use -= bytes;
}

void MemoryPool::refill(unsigned k) {
  const std::size_t chunk = std::size_t{1} << k;
  const std::size_t bytes = chunk > block_bytes_ ? chunk : block_bytes_;
  void* base = std::aligned_alloc(kPageBytes, bytes);
  if (base == nullptr) {
    throw Error(Errc::out_of_memory,
                "MemoryPool: system allocator failed for " + std::to_string(bytes) + " bytes");
  }
  blocks_.push_back({base, bytes});
  stats_.bytes_reserved += bytes;

  auto* p = static_cast<std::byte*>(base);
  const std::size_t count = bytes / chunk;
  for (std::size_t i = 0; i + 1 < count; ++i) store_next(p + i * chunk, p + (i + 1) * chunk);
  store_next(p + (count - 1) * chunk, free_heads_[k]);
  free_heads_[k] = base;
}

void MemoryPool::shadow_on_allocate(void* chunk, std::size_t bytes) {
  const auto addr = reinterpret_cast<std::uintptr_t>(chunk);
  auto next = shadow_chunks_.lower_bound(addr);
  if (next != shadow_chunks_.end() && next->first == addr) {
    if (next->second.state == ShadowState::live) ++shadow_.overlaps;
    shadow_chunks_.erase(next++);
  }
  if (next != shadow_chunks_.end() && next->second.state == ShadowState::live &&
      next->first < addr + bytes) {
    ++shadow_.overlaps;
  }
  if (next != shadow_chunks_.begin()) {
    auto prev = std::prev(next);
    if (prev->second.state == ShadowState::live && prev->first + prev->second.bytes > addr) {
      ++shadow_.overlaps;
    }
  }
  shadow_chunks_.emplace(addr, ShadowEntry{bytes, ShadowState::live});
}

bool MemoryPool::shadow_on_deallocate(void* chunk, std::size_t bytes) {
  const auto it = shadow_chunks_.find(reinterpret_cast<std::uintptr_t>(chunk));
  if (it == shadow_chunks_.end()) {
    ++shadow_.foreign_frees;
    return false;
  }
  if (it->second.state == ShadowState::freed) {
    ++shadow_.double_frees;
    return false;
  }
  if (it->second.bytes != bytes) {
    ++shadow_.size_mismatches;
    return false;
  }
  it->second.state = ShadowState::freed;
  return true;
}

}  // namespace tango
