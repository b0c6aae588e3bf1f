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

#include "tango/core.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace tango {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::uint64_t parse_u64(std::string_view key, std::string_view text) {
  int base = 10;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    base = 16;
  }
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, base);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::invalid_config,
                "config key '" + std::string(key) + "': not an unsigned integer: '" +
                    std::string(text) + "'");
  }
  return value;
}

bool parse_bool(std::string_view key, std::string_view text) {
  if (text == "true" || text == "1" || text == "yes" || text == "on") return true;
  if (text == "false" || text == "0" || text == "no" || text == "off") return false;
  throw Error(Errc::invalid_config,
              "config key '" + std::string(key) + "': not a boolean: '" + std::string(text) + "'");
}

}  // namespace

std::uint64_t compute_th0(std::uint64_t cache_line_bytes, std::uint64_t edge_bytes,
                          std::uint64_t deg_bytes) {
  if (cache_line_bytes == 0 || edge_bytes == 0 || deg_bytes == 0) {
    throw Error(Errc::invalid_config, "compute_th0: all sizes must be positive");
  }
  if (cache_line_bytes < deg_bytes + edge_bytes) {
    throw Error(Errc::invalid_config, "compute_th0: cache line of " +
                                          std::to_string(cache_line_bytes) +
                                          " bytes cannot hold the degree field and one edge");
  }
  return (cache_line_bytes - deg_bytes) / edge_bytes;
}

void Config::validate() const {
  // Type2/Type3 records need deg, cap, edge pointer, table pointer and a
  // tombstone counter: 40 bytes.
  if (!std::has_single_bit(cache_line_bytes) || cache_line_bytes < 64) {
    throw Error(Errc::invalid_config, "cache_line_bytes must be a power of two >= 64");
  }
  const std::uint64_t t0 = th0();
  if (!std::has_single_bit(th1) || th1 <= t0) {
    throw Error(Errc::invalid_config, "th1 must be a power of two greater than th0 (" +
                                          std::to_string(t0) + "), got " + std::to_string(th1));
  }
  const std::uint64_t per_line = cache_line_bytes / kDegreeBytes;
  if (partition_size == 0 || partition_size % per_line != 0) {
    throw Error(Errc::invalid_config, "partition_size must be a positive multiple of " +
                                          std::to_string(per_line));
  }
  if (hash_constant == 0) {
    throw Error(Errc::invalid_config, "hash_constant must be nonzero");
  }
  if (block_bytes < 4096) {
    throw Error(Errc::invalid_config, "block_bytes must be at least one page (4096)");
  }
}

void apply_config_entry(Config& config, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "cache_line_bytes") {
    config.cache_line_bytes = parse_u64(key, value);
  } else if (key == "weighted") {
    config.weighted = parse_bool(key, value);
  } else if (key == "directed") {
    config.directed = parse_bool(key, value);
  } else if (key == "th1") {
    config.th1 = parse_u64(key, value);
  } else if (key == "partition_size") {
    config.partition_size = parse_u64(key, value);
  } else if (key == "hash_constant") {
    config.hash_constant = parse_u64(key, value);
  } else if (key == "block_bytes") {
    config.block_bytes = parse_u64(key, value);
  } else {
    throw Error(Errc::invalid_config, "unknown config key '" + std::string(key) + "'");
  }
}

Config load_config_file(const std::filesystem::path& path, Config base) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open config file " + path.string());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) {
      view = view.substr(0, hash);
    }
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(Errc::invalid_config,
                  path.string() + ":" + std::to_string(line_no) + ": expected key=value");
    }
    apply_config_entry(base, view.substr(0, eq), view.substr(eq + 1));
  }
  return base;
}

std::string to_string(const Config& c) {
  std::ostringstream os;
  os << "cache_line_bytes=" << c.cache_line_bytes << " weighted=" << c.weighted
     << " directed=" << c.directed << " th1=" << c.th1 << " partition_size=" << c.partition_size
     << " hash_constant=0x" << std::hex << c.hash_constant << std::dec
     << " block_bytes=" << c.block_bytes;
  return os.str();
}

}  // namespace tango
