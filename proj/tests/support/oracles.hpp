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

// Reference implementations used as test oracles. Written independently of
// the library code: plain division/modulus, std::map adjacency, textbook
// graph algorithms.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr u64 kInf = std::numeric_limits<u64>::max();

// Probe slot from the closed-form definition, evaluated with / and %.
inline u64 probe(u64 key, u64 i, u64 M, u64 N, u64 A, unsigned w) {
  const u128 modulus = u128{1} << w;
  unsigned m = 0;
  while ((u64{1} << m) < M) ++m;
  const u128 y = (u128{A} * key) % modulus;
  const u128 h3 = y / (u128{1} << (w - m));
  const u128 h4 = (y / (u128{1} << (w - 2 * m))) | 1;
  const u128 x = i / N;
  const u128 h1 = (h3 + x * h4) % M;
  const u128 h2 = (u128{key} + i % N) % N;
  return static_cast<u64>(N * h1 + h2);
}

// Set-semantics graph: out[v] maps dst -> prop; in[v] mirrors it for directed graphs.
struct ModelGraph {
  u64 n = 0;
  bool directed = false;
  std::vector<std::map<u64, u64>> out;
  std::vector<std::map<u64, u64>> in;

  ModelGraph(u64 n_, bool directed_) : n(n_), directed(directed_), out(n_), in(directed_ ? n_ : 0) {}

  // true if the edge is new
  bool insert(u64 s, u64 d, u64 prop = 1) {
    const bool fresh = out[s].count(d) == 0;
    out[s][d] = prop;
    if (directed) {
      in[d][s] = prop;
    } else {
      out[d][s] = prop;
    }
    return fresh;
  }

  bool erase(u64 s, u64 d) {
    if (out[s].erase(d) == 0) return false;
    if (directed) {
      in[d].erase(s);
    } else {
      out[d].erase(s);
    }
    return true;
  }

  u64 edge_count() const {
    u64 c = 0;
    for (u64 v = 0; v < n; ++v) {
      for (const auto& [d, p] : out[v]) {
        if (directed || v <= d) ++c;
      }
    }
    return c;
  }
};

inline std::vector<u64> bfs(const ModelGraph& g, u64 source) {
  std::vector<u64> dist(g.n, kInf);
  std::queue<u64> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    const u64 u = q.front();
    q.pop();
    for (const auto& [v, p] : g.out[u]) {
      if (dist[v] == kInf) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
    }
  }
  return dist;
}

inline std::vector<u64> dijkstra(const ModelGraph& g, u64 source) {
  std::vector<u64> dist(g.n, kInf);
  using Item = std::pair<u64, u64>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0, source});
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d != dist[u]) continue;
    for (const auto& [v, w] : g.out[u]) {
      if (d + w < dist[v]) {
        dist[v] = d + w;
        pq.push({dist[v], v});
      }
    }
  }
  return dist;
}

// Component label = smallest vertex id in the (weakly) connected component.
inline std::vector<u64> components(const ModelGraph& g) {
  std::vector<u64> parent(g.n);
  std::iota(parent.begin(), parent.end(), u64{0});
  std::function<u64(u64)> find = [&](u64 x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (u64 u = 0; u < g.n; ++u) {
    for (const auto& [v, p] : g.out[u]) {
      const u64 a = find(u), b = find(v);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<u64> label(g.n);
  for (u64 v = 0; v < g.n; ++v) label[v] = find(v);
  return label;
}

// Power iteration of rank(v) = (1-d)/n + d * sum_{u->v} rank(u)/outdeg(u),
// no sink redistribution, run to a much tighter tolerance than the library.
inline std::vector<double> pagerank(const ModelGraph& g, double d = 0.85) {
  const double n = static_cast<double>(g.n);
  std::vector<double> r(g.n, 1.0 / n), next(g.n);
  for (int it = 0; it < 10000; ++it) {
    std::fill(next.begin(), next.end(), (1.0 - d) / n);
    for (u64 u = 0; u < g.n; ++u) {
      if (g.out[u].empty()) continue;
      const double share = d * r[u] / static_cast<double>(g.out[u].size());
      for (const auto& [v, p] : g.out[u]) next[v] += share;
    }
    double delta = 0;
    for (u64 v = 0; v < g.n; ++v) delta = std::max(delta, std::abs(next[v] - r[v]));
    r.swap(next);
    if (delta < 1e-13) break;
  }
  return r;
}

}  // namespace oracle
