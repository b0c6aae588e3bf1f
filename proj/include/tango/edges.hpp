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

#include <concepts>
#include <cstdint>
#include <type_traits>

#include "tango/core.hpp"

namespace tango {

// Storage layouts of one adjacency entry: {dst} or {dst, prop}.
struct PlainEdge {
  VertexId dst;
};

struct WeightedEdge {
  VertexId dst;
  std::uint64_t prop;
};

static_assert(sizeof(PlainEdge) == 8);
static_assert(sizeof(WeightedEdge) == 16);

template <class E>
concept StoredEdge = std::same_as<E, PlainEdge> || std::same_as<E, WeightedEdge>;

template <StoredEdge E>
inline constexpr bool kIsWeighted = std::is_same_v<E, WeightedEdge>;

constexpr std::uint64_t edge_prop(const PlainEdge&) noexcept { return 1; }
constexpr std::uint64_t edge_prop(const WeightedEdge& e) noexcept { return e.prop; }

constexpr void set_edge_prop(PlainEdge&, std::uint64_t) noexcept {}
constexpr void set_edge_prop(WeightedEdge& e, std::uint64_t prop) noexcept { e.prop = prop; }

template <StoredEdge E>
constexpr E make_edge(VertexId dst, std::uint64_t prop) noexcept {
  if constexpr (kIsWeighted<E>) {
    return E{dst, prop};
  } else {
    (void)prop;
    return E{dst};
  }
}

}  // namespace tango
