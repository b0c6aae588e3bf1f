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

// Plain adjacency lists (one contiguous array per vertex, linear lookup) in
// the two usual threading flavours:
//
//   shared   any thread may update any vertex after taking its mutex
//   chunked  vertices are owned by fixed worker partitions, no locks
//
// Arrays double from an initial capacity of 4 and never shrink.

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tango/core.hpp"
#include "tango/edges.hpp"

namespace tango {

enum class AdjListMode { shared, chunked };

template <StoredEdge EdgeT>
class AdjListStore {
 public:
  using edge_type = EdgeT;
  static constexpr std::size_t kInitialCapacity = 4;

  AdjListStore(const Config& config, std::uint64_t num_vertices, AdjListMode mode,
               unsigned num_owners = 1);

  UpdateResult insert_edge(VertexId src, VertexId dst, std::uint64_t prop = 1);
  DeleteResult delete_edge(VertexId src, VertexId dst);
  UpdateResult insert_half(Side side, VertexId v, VertexId nbr, std::uint64_t prop = 1);
  DeleteResult delete_half(Side side, VertexId v, VertexId nbr);

  std::span<const EdgeT> neighbors(VertexId v) const noexcept { return neighbors(Side::out, v); }
  std::span<const EdgeT> in_neighbors(VertexId v) const noexcept {
    return neighbors(directed_ ? Side::in : Side::out, v);
  }
  std::span<const EdgeT> neighbors(Side side, VertexId v) const noexcept {
    return side_[static_cast<unsigned>(side)][v];
  }

  std::uint64_t degree(VertexId v) const { return degree(Side::out, v); }
  std::uint64_t degree(Side side, VertexId v) const;
  std::optional<std::uint64_t> find_edge(Side side, VertexId v, VertexId nbr) const;

  // Vertex headers (+ mutexes for shared) + reserved edge capacity + vertex properties.
  std::uint64_t memory_bytes() const noexcept;

  std::uint64_t num_vertices() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  AdjListMode mode() const noexcept { return mode_; }
  unsigned num_owners() const noexcept { return static_cast<unsigned>(part_.num_threads()); }
  unsigned owner_of(VertexId v) const noexcept { return static_cast<unsigned>(part_(v)); }

 private:
  void check_vertex(VertexId v) const;
  UpdateResult insert_locked(std::vector<EdgeT>& edges, VertexId nbr, std::uint64_t prop);
  static DeleteResult delete_locked(std::vector<EdgeT>& edges, VertexId nbr);

  std::uint64_t n_;
  bool directed_;
  AdjListMode mode_;
  Partitioner part_;
  std::vector<std::vector<EdgeT>> side_[2];
  std::unique_ptr<std::mutex[]> guards_[2];
};

template <StoredEdge EdgeT>
AdjListStore<EdgeT>::AdjListStore(const Config& config, std::uint64_t num_vertices,
                                  AdjListMode mode, unsigned num_owners)
    : n_(num_vertices),
      directed_(config.directed),
      mode_(mode),
      part_(num_owners == 0 ? 1 : num_owners, config.partition_size) {
  if (config.weighted != kIsWeighted<EdgeT>) {
    throw Error(Errc::invalid_config, "AdjListStore: config.weighted does not match edge layout");
  }
  const unsigned sides = directed_ ? 2 : 1;
  for (unsigned s = 0; s < sides; ++s) {
    side_[s].resize(n_);
    if (mode_ == AdjListMode::shared) guards_[s] = std::make_unique<std::mutex[]>(n_);
  }
}

template <StoredEdge EdgeT>
void AdjListStore<EdgeT>::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw Error(Errc::vertex_out_of_range,
                "vertex " + std::to_string(v) + " out of range [0, " + std::to_string(n_) + ")");
  }
}

template <StoredEdge EdgeT>
UpdateResult AdjListStore<EdgeT>::insert_locked(std::vector<EdgeT>& edges, VertexId nbr,
                                                std::uint64_t prop) {
  for (EdgeT& e : edges) {
    if (e.dst == nbr) {
      set_edge_prop(e, prop);
      return UpdateResult::updated;
    }
  }
  if (edges.size() == edges.capacity()) {
    edges.reserve(edges.empty() ? kInitialCapacity : 2 * edges.capacity());
  }
  edges.push_back(make_edge<EdgeT>(nbr, prop));
  return UpdateResult::inserted;
}

template <StoredEdge EdgeT>
DeleteResult AdjListStore<EdgeT>::delete_locked(std::vector<EdgeT>& edges, VertexId nbr) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].dst == nbr) {
      edges[i] = edges.back();
      edges.pop_back();
      return DeleteResult::deleted;
    }
  }
  return DeleteResult::absent;
}

template <StoredEdge EdgeT>
UpdateResult AdjListStore<EdgeT>::insert_half(Side side, VertexId v, VertexId nbr,
                                              std::uint64_t prop) {
  check_vertex(v);
  check_vertex(nbr);
  const auto s = static_cast<unsigned>(side);
  if (mode_ == AdjListMode::shared) {
    std::lock_guard lock(guards_[s][v]);
    return insert_locked(side_[s][v], nbr, prop);
  }
  return insert_locked(side_[s][v], nbr, prop);
}

template <StoredEdge EdgeT>
DeleteResult AdjListStore<EdgeT>::delete_half(Side side, VertexId v, VertexId nbr) {
  check_vertex(v);
  check_vertex(nbr);
  const auto s = static_cast<unsigned>(side);
  if (mode_ == AdjListMode::shared) {
    std::lock_guard lock(guards_[s][v]);
    return delete_locked(side_[s][v], nbr);
  }
  return delete_locked(side_[s][v], nbr);
}

template <StoredEdge EdgeT>
UpdateResult AdjListStore<EdgeT>::insert_edge(VertexId src, VertexId dst, std::uint64_t prop) {
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
DeleteResult AdjListStore<EdgeT>::delete_edge(VertexId src, VertexId dst) {
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
std::uint64_t AdjListStore<EdgeT>::degree(Side side, VertexId v) const {
  check_vertex(v);
  return side_[static_cast<unsigned>(side)][v].size();
}

template <StoredEdge EdgeT>
std::optional<std::uint64_t> AdjListStore<EdgeT>::find_edge(Side side, VertexId v,
                                                            VertexId nbr) const {
  check_vertex(v);
  for (const EdgeT& e : neighbors(side, v)) {
    if (e.dst == nbr) return edge_prop(e);
  }
  return std::nullopt;
}

template <StoredEdge EdgeT>
std::uint64_t AdjListStore<EdgeT>::memory_bytes() const noexcept {
  const unsigned sides = directed_ ? 2 : 1;
  std::uint64_t per_vertex = sizeof(std::vector<EdgeT>);
  if (mode_ == AdjListMode::shared) per_vertex += sizeof(std::mutex);
  std::uint64_t bytes = n_ * per_vertex * sides + n_ * sizeof(std::uint64_t);
  for (unsigned s = 0; s < sides; ++s) {
    for (const auto& edges : side_[s]) bytes += edges.capacity() * sizeof(EdgeT);
  }
  return bytes;
}

extern template class AdjListStore<PlainEdge>;
extern template class AdjListStore<WeightedEdge>;

}  // namespace tango
