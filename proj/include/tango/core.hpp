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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tango {

using VertexId = std::uint64_t;

// The two largest ids are reserved as hash-table markers.
inline constexpr VertexId kMaxVertexId = ~VertexId{0} - 2;

inline constexpr std::uint64_t kHashConstant64 = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kHashConstant32 = 2654435761ull;
inline constexpr std::uint64_t kDefaultBlockBytes = std::uint64_t{4} << 20;
inline constexpr std::uint64_t kDegreeBytes = 8;

enum class Errc {
  invalid_config = 1,
  invalid_argument,
  vertex_out_of_range,
  capacity_exceeded,
  out_of_memory,
  parse_error,
  io_error,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

enum class Side : std::uint8_t { out = 0, in = 1 };
enum class UpdateResult { inserted, updated };
enum class DeleteResult { deleted, absent };
enum class VertexKind : std::uint8_t { type1 = 1, type2 = 2, type3 = 3 };

// Logical edge as seen by callers; storage layouts live in store.hpp.
struct Edge {
  VertexId dst = 0;
  std::uint64_t prop = 1;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// One entry of an update stream.
struct EdgeRecord {
  VertexId src = 0;
  VertexId dst = 0;
  std::uint64_t prop = 1;
  friend bool operator==(const EdgeRecord&, const EdgeRecord&) = default;
};

/// Number of edges that fit beside the degree field in one metadata record.
/// Throws Errc::invalid_config when not even one edge fits.
std::uint64_t compute_th0(std::uint64_t cache_line_bytes, std::uint64_t edge_bytes,
                          std::uint64_t deg_bytes);

/// 2^ceil(log2(3 * edges_per_cache_line)).
constexpr std::uint64_t th1_rule_of_thumb(std::uint64_t edges_per_cache_line) noexcept {
  return std::bit_ceil(3 * (edges_per_cache_line == 0 ? 1 : edges_per_cache_line));
}

constexpr std::uint64_t partition_of(VertexId v, std::uint64_t num_threads,
                                     std::uint64_t partition_size) noexcept {
  return (v / partition_size) % num_threads;
}

// partition_of with the divisions replaced by shifts/masks when the
// arguments allow it. Used on the routing hot path.
class Partitioner {
 public:
  Partitioner(std::uint64_t num_threads, std::uint64_t partition_size) noexcept
      : threads_(num_threads == 0 ? 1 : num_threads),
        size_(partition_size == 0 ? 1 : partition_size),
        size_shift_(std::has_single_bit(size_) ? std::countr_zero(size_) : -1),
        thread_mask_(std::has_single_bit(threads_) ? threads_ - 1 : 0),
        pow2_threads_(std::has_single_bit(threads_)) {}

  std::uint64_t operator()(VertexId v) const noexcept {
    const std::uint64_t chunk = size_shift_ >= 0 ? (v >> size_shift_) : v / size_;
    return pow2_threads_ ? (chunk & thread_mask_) : chunk % threads_;
  }

  std::uint64_t num_threads() const noexcept { return threads_; }
  std::uint64_t partition_size() const noexcept { return size_; }

 private:
  std::uint64_t threads_;
  std::uint64_t size_;
  int size_shift_;
  std::uint64_t thread_mask_;
  bool pow2_threads_;
};

struct Config {
  std::uint64_t cache_line_bytes = 64;
  bool weighted = false;
  bool directed = false;
  std::uint64_t th1 = 32;
  std::uint64_t partition_size = 512;
  std::uint64_t hash_constant = kHashConstant64;
  std::uint64_t block_bytes = kDefaultBlockBytes;

  std::uint64_t edge_bytes() const noexcept { return weighted ? 16 : 8; }
  std::uint64_t th0() const { return compute_th0(cache_line_bytes, edge_bytes(), kDegreeBytes); }

  // Throws Errc::invalid_config describing the first violated constraint.
  void validate() const;
};

// Accepts the keys cache_line_bytes, weighted, directed, th1, partition_size,
// hash_constant, block_bytes. Numbers may be decimal or 0x-prefixed hex;
// booleans are true/false/1/0/yes/no.
void apply_config_entry(Config& config, std::string_view key, std::string_view value);

// key=value per line; '#' starts a comment; blank lines ignored.
Config load_config_file(const std::filesystem::path& path, Config base = {});

std::string to_string(const Config& config);

}  // namespace tango
