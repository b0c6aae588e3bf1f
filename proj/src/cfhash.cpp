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

#include "tango/cfhash.hpp"

#include <cstring>
#include <string>
#include <utility>

namespace tango {

double ProbeHistogram::fraction_at_most(std::uint64_t distance) const noexcept {
  if (samples_ == 0) return 1.0;
  std::uint64_t sum = 0;
  const std::uint64_t last = distance > kMaxTracked ? kMaxTracked : distance;
  for (std::uint64_t d = 0; d <= last; ++d) sum += counts_[d];
  return static_cast<double>(sum) / static_cast<double>(samples_);
}

void SlotArray::clear() const noexcept {
  std::memset(words_, 0xFF, bytes_for(capacity()));
}

SlotArray::Probe SlotArray::probe_insert(std::uint64_t key, AccessTrace* trace) const noexcept {
  const std::uint64_t y = key * multiplier_;
  const std::uint64_t line_mask = (std::uint64_t{1} << log_m_) - 1;
  const std::uint64_t h3 = log_m_ == 0 ? 0 : y >> (64 - log_m_);
  const std::uint64_t h4 = log_m_ == 0 ? 1 : (y >> (64 - 2 * log_m_)) | 1;
  const std::uint64_t lines = line_mask + 1;

  Probe result;
  bool have_tomb = false;
  std::uint64_t tomb_slot = 0;
  std::uint32_t distance = 0;
  std::uint64_t line = h3;
  for (std::uint64_t j = 0; j < lines; ++j, line = (line + h4) & line_mask) {
    const std::uint64_t* keys = words_ + line * kWordsPerLine;
    if (trace != nullptr) trace->hash_lines.insert(reinterpret_cast<std::uintptr_t>(keys));
    for (std::uint64_t x = 0; x < kSlotsPerLine; ++x) {
      const std::uint64_t off = (key + x) & (kSlotsPerLine - 1);
      const std::uint64_t k = keys[off];
      ++distance;
      if (k == key) {
        result.slot = (line << kSlotsPerLineLog2) + off;
        result.distance = distance;
        result.found = true;
        return result;
      }
      if (k == kEmptyKey) {
        result.distance = distance;
        if (have_tomb) {
          result.slot = tomb_slot;
          result.on_tombstone = true;
        } else {
          result.slot = (line << kSlotsPerLineLog2) + off;
        }
        return result;
      }
      if (k == kTombstoneKey && !have_tomb) {
        have_tomb = true;
        tomb_slot = (line << kSlotsPerLineLog2) + off;
      }
    }
  }
  result.distance = distance;
  if (have_tomb) {
    result.slot = tomb_slot;
    result.on_tombstone = true;
  }
  return result;
}

SlotArray::Probe SlotArray::probe_find(std::uint64_t key, AccessTrace* trace) const noexcept {
  const std::uint64_t y = key * multiplier_;
  const std::uint64_t line_mask = (std::uint64_t{1} << log_m_) - 1;
  const std::uint64_t h3 = log_m_ == 0 ? 0 : y >> (64 - log_m_);
  const std::uint64_t h4 = log_m_ == 0 ? 1 : (y >> (64 - 2 * log_m_)) | 1;
  const std::uint64_t lines = line_mask + 1;

  Probe result;
  std::uint32_t distance = 0;
  std::uint64_t line = h3;
  for (std::uint64_t j = 0; j < lines; ++j, line = (line + h4) & line_mask) {
    const std::uint64_t* keys = words_ + line * kWordsPerLine;
    if (trace != nullptr) trace->hash_lines.insert(reinterpret_cast<std::uintptr_t>(keys));
    for (std::uint64_t x = 0; x < kSlotsPerLine; ++x) {
      const std::uint64_t off = (key + x) & (kSlotsPerLine - 1);
      const std::uint64_t k = keys[off];
      ++distance;
      if (k == key) {
        result.slot = (line << kSlotsPerLineLog2) + off;
        result.distance = distance;
        result.found = true;
        return result;
      }
      if (k == kEmptyKey) {
        result.distance = distance;
        return result;
      }
    }
  }
  result.distance = distance;
  return result;
}

namespace {

unsigned log_lines_for(std::uint64_t capacity_slots) {
  if (!std::has_single_bit(capacity_slots) || capacity_slots < kSlotsPerLine) {
    throw Error(Errc::invalid_argument, "CfhTable: capacity " + std::to_string(capacity_slots) +
                                            " is not a power of two >= " +
                                            std::to_string(kSlotsPerLine));
  }
  const auto log_m = static_cast<unsigned>(std::countr_zero(capacity_slots) - kSlotsPerLineLog2);
  if (2 * log_m > 64) throw Error(Errc::invalid_argument, "CfhTable: too many lines");
  return log_m;
}

}  // namespace

CfhTable::CfhTable(MemoryPool& pool, std::uint64_t capacity_slots, std::uint64_t multiplier)
    : pool_(&pool), log_m_(log_lines_for(capacity_slots)), multiplier_(multiplier) {
  words_ = static_cast<std::uint64_t*>(pool_->allocate(SlotArray::bytes_for(capacity_slots)));
  slots().clear();
}

CfhTable::~CfhTable() { release(); }

CfhTable::CfhTable(CfhTable&& other) noexcept
    : pool_(other.pool_),
      words_(std::exchange(other.words_, nullptr)),
      log_m_(other.log_m_),
      multiplier_(other.multiplier_),
      live_(std::exchange(other.live_, 0)),
      tombstones_(std::exchange(other.tombstones_, 0)),
      stats_(other.stats_) {}

CfhTable& CfhTable::operator=(CfhTable&& other) noexcept {
  if (this != &other) {
    release();
    pool_ = other.pool_;
    words_ = std::exchange(other.words_, nullptr);
    log_m_ = other.log_m_;
    multiplier_ = other.multiplier_;
    live_ = std::exchange(other.live_, 0);
    tombstones_ = std::exchange(other.tombstones_, 0);
    stats_ = other.stats_;
  }
  return *this;
}

void CfhTable::release() noexcept {
  if (words_ != nullptr) {
    pool_->deallocate(words_, SlotArray::bytes_for(capacity_slots()));
    words_ = nullptr;
  }
}

void CfhTable::check_key(VertexId key) {
  if (is_reserved_key(key)) {
    throw Error(Errc::invalid_argument, "CfhTable: key collides with a reserved marker");
  }
}

std::optional<std::uint64_t> CfhTable::find(VertexId key) {
  check_key(key);
  const auto probe = slots().probe_find(key);
  stats_.find.record(probe.distance);
  if (!probe.found) return std::nullopt;
  return slots().value(probe.slot);
}

InsertOutcome CfhTable::insert(VertexId key, std::uint64_t value) {
  check_key(key);
  auto probe = slots().probe_insert(key);
  stats_.insert.record(probe.distance);
  if (probe.found) {
    slots().value(probe.slot) = value;
    return InsertOutcome::updated;
  }
  const std::uint64_t limit = capacity_slots() / 2;
  if (live_ + 1 > limit) {
    throw Error(Errc::capacity_exceeded, "CfhTable: load factor would exceed 0.5");
  }
  if (!probe.on_tombstone && live_ + tombstones_ + 1 > limit) {
    rebuild(capacity_slots());
    probe = slots().probe_insert(key);
  }
  slots().key(probe.slot) = key;
  slots().value(probe.slot) = value;
  if (probe.on_tombstone) --tombstones_;
  ++live_;
  return InsertOutcome::inserted;
}

RemoveOutcome CfhTable::remove(VertexId key) {
  check_key(key);
  const auto probe = slots().probe_find(key);
  stats_.find.record(probe.distance);
  if (!probe.found) return RemoveOutcome::absent;
  slots().key(probe.slot) = kTombstoneKey;
  --live_;
  ++tombstones_;
  return RemoveOutcome::removed;
}

void CfhTable::rebuild(std::uint64_t new_capacity_slots) {
  const unsigned new_log_m = log_lines_for(new_capacity_slots);
  if (new_capacity_slots < 2 * live_) {
    throw Error(Errc::invalid_argument, "CfhTable::rebuild: capacity below twice the live count");
  }
  auto* fresh = static_cast<std::uint64_t*>(pool_->allocate(SlotArray::bytes_for(new_capacity_slots)));
  const SlotArray next(fresh, new_log_m, multiplier_);
  next.clear();
  const SlotArray current = slots();
  for (std::uint64_t s = 0; s < current.capacity(); ++s) {
    const std::uint64_t k = current.key(s);
    if (is_reserved_key(k)) continue;
    const auto probe = next.probe_insert(k);
    next.key(probe.slot) = k;
    next.value(probe.slot) = current.value(s);
  }
  release();
  words_ = fresh;
  log_m_ = new_log_m;
  tombstones_ = 0;
}

}  // namespace tango
