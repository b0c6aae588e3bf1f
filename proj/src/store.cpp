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

#include "tango/store.hpp"

namespace tango {

void StoreCounters::merge(const StoreCounters& o) noexcept {
  edges_copied += o.edges_copied;
  rehash_inserts += o.rehash_inserts;
  grows += o.grows;
  shrinks += o.shrinks;
  type1_to_type2 += o.type1_to_type2;
  type2_to_type3 += o.type2_to_type3;
  type3_to_type2 += o.type3_to_type2;
  type2_to_type1 += o.type2_to_type1;
  tombstone_rebuilds += o.tombstone_rebuilds;
  hash_lookups += o.hash_lookups;
  probes.merge(o.probes);
}

namespace detail {

AlignedBytes allocate_zeroed_pages(std::size_t bytes) {
  constexpr std::size_t kPage = 4096;
  if (bytes == 0) return AlignedBytes(nullptr);
  const std::size_t rounded = (bytes + kPage - 1) / kPage * kPage;
  void* p = std::aligned_alloc(kPage, rounded);
  if (p == nullptr) {
    throw Error(Errc::out_of_memory, "cannot allocate " + std::to_string(rounded) + " bytes");
  }
  std::memset(p, 0, rounded);
  return AlignedBytes(static_cast<std::byte*>(p));
}

}  // namespace detail

template class HybridStore<PlainEdge>;
template class HybridStore<WeightedEdge>;

}  // namespace tango
