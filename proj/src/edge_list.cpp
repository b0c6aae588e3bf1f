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

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <unordered_map>

#include "tango/bench.hpp"

namespace tango::bench {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on whitespace; at most 4 tokens are kept (the 4th only flags excess).
std::size_t tokenize(std::string_view line, std::string_view (&tok)[4]) {
  std::size_t n = 0;
  std::size_t i = 0;
  while (i < line.size() && n < 4) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    tok[n++] = line.substr(i, j - i);
    i = j;
  }
  return n;
}

[[noreturn]] void fail(std::string_view source, std::uint64_t line_no, const std::string& msg) {
  throw Error(Errc::parse_error,
              std::string(source) + ":" + std::to_string(line_no) + ": " + msg);
}

std::uint64_t parse_number(std::string_view tok, std::string_view what, std::string_view source,
                           std::uint64_t line_no) {
  if (!tok.empty() && tok.front() == '-') {
    fail(source, line_no, "negative " + std::string(what) + " '" + std::string(tok) + "'");
  }
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec == std::errc::result_out_of_range) {
    fail(source, line_no, std::string(what) + " overflow '" + std::string(tok) + "'");
  }
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    fail(source, line_no, "bad " + std::string(what) + " '" + std::string(tok) + "'");
  }
  return v;
}

std::uint64_t mix(std::uint64_t x) {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdull;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ull;
  x ^= x >> 33;
  return x;
}

std::uint64_t pair_weight(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return 1 + mix(a * kHashConstant64 + b) % 100;
}

}  // namespace

EdgeList parse_snap(std::istream& in, std::string_view source_name) {
  EdgeList list;
  std::unordered_map<std::uint64_t, VertexId> dense;
  auto remap = [&](std::uint64_t id) {
    auto [it, fresh] = dense.try_emplace(id, list.original_ids.size());
    if (fresh) list.original_ids.push_back(id);
    return it->second;
  };

  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view tok[4];
    const std::size_t n = tokenize(line, tok);
    if (n == 0 || tok[0].front() == '#') continue;
    if (n < 2) fail(source_name, line_no, "expected 'src dst [weight]'");
    if (n > 3) fail(source_name, line_no, "trailing data after weight");
    const std::uint64_t src = parse_number(tok[0], "vertex id", source_name, line_no);
    const std::uint64_t dst = parse_number(tok[1], "vertex id", source_name, line_no);
    std::uint64_t w = 1;
    if (n == 3) {
      w = parse_number(tok[2], "weight", source_name, line_no);
      list.weighted = true;
    }
    if (src > kMaxVertexId || dst > kMaxVertexId) {
      fail(source_name, line_no, "vertex id overflow");
    }
    const VertexId s = remap(src);
    const VertexId d = remap(dst);
    list.edges.push_back({s, d, w});
  }
  if (in.bad()) throw Error(Errc::io_error, std::string(source_name) + ": read error");
  list.num_vertices = list.original_ids.size();
  return list;
}

EdgeList load_snap(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return parse_snap(in, path.string());
}

void shuffle(EdgeList& list, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::shuffle(list.edges.begin(), list.edges.end(), rng);
}

EdgeList gen_synthetic(Synthetic kind, std::uint64_t num_vertices, std::uint64_t num_edges,
                       std::uint64_t seed, bool weighted, bool directed) {
  if (num_vertices < 2 && num_edges > 0) {
    throw Error(Errc::invalid_argument, "gen_synthetic: need at least 2 vertices for loop-free edges");
  }
  if (num_edges < num_vertices) {
    throw Error(Errc::invalid_argument, "gen_synthetic: requires edges >= vertices");
  }
  EdgeList list;
  list.num_vertices = num_vertices;
  list.directed = directed;
  list.weighted = weighted;
  list.edges.reserve(num_edges);

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<VertexId> uniform(0, num_vertices - 1);

  std::vector<VertexId> rank_to_vertex;
  std::discrete_distribution<VertexId> zipf;
  if (kind == Synthetic::heavy_tailed) {
    rank_to_vertex.resize(num_vertices);
    std::iota(rank_to_vertex.begin(), rank_to_vertex.end(), VertexId{0});
    std::shuffle(rank_to_vertex.begin(), rank_to_vertex.end(), rng);
    std::vector<double> w(num_vertices);
    for (std::uint64_t r = 0; r < num_vertices; ++r) w[r] = 1.0 / static_cast<double>(r + 1);
    zipf = std::discrete_distribution<VertexId>(w.begin(), w.end());
  }

  while (list.edges.size() < num_edges) {
    const VertexId src = uniform(rng);
    const VertexId dst =
        kind == Synthetic::short_tailed ? uniform(rng) : rank_to_vertex[zipf(rng)];
    if (src == dst) continue;
    list.edges.push_back({src, dst, weighted ? pair_weight(src, dst) : 1});
  }
  return list;
}

std::uint64_t max_batch_degree(const EdgeList& list, std::size_t batch_size) {
  if (batch_size == 0) throw Error(Errc::invalid_argument, "batch size must be >= 1");
  std::vector<std::uint64_t> count(list.num_vertices, 0);
  std::uint64_t best = 0;
  for (std::size_t begin = 0; begin < list.edges.size(); begin += batch_size) {
    const std::size_t end = std::min(list.edges.size(), begin + batch_size);
    for (std::size_t i = begin; i < end; ++i) {
      best = std::max(best, ++count[list.edges[i].src]);
      if (!list.directed && list.edges[i].dst != list.edges[i].src) {
        best = std::max(best, ++count[list.edges[i].dst]);
      }
    }
    for (std::size_t i = begin; i < end; ++i) count[list.edges[i].src] = count[list.edges[i].dst] = 0;
  }
  return best;
}

}  // namespace tango::bench
