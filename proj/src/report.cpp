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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "tango/bench.hpp"

namespace tango::bench {

const char* const kPageRankNote =
    "pagerank: rank(v) = (1-d)/|V| + d*sum_{u->v} rank(u)/outdeg(u); d=0.85, tol=1e-7, "
    "max 100 iterations, sink mass not redistributed";

std::string_view to_string(Format f) noexcept {
  switch (f) {
    case Format::tango: return "tango";
    case Format::adlist_shared: return "adlist-shared";
    case Format::adlist_chunked: return "adlist-chunked";
  }
  return "?";
}

Format parse_format(std::string_view name) {
  if (name == "tango") return Format::tango;
  if (name == "adlist-shared" || name == "adlist_shared") return Format::adlist_shared;
  if (name == "adlist-chunked" || name == "adlist_chunked") return Format::adlist_chunked;
  throw Error(Errc::invalid_argument, "unknown format '" + std::string(name) + "'");
}

std::string_view to_string(Phase p) noexcept {
  switch (p) {
    case Phase::insert: return "insert";
    case Phase::erase: return "delete";
    case Phase::summary: return "summary";
  }
  return "?";
}

unsigned parse_algorithms(std::string_view list) {
  unsigned bits = 0;
  if (list.empty() || list == "none") return 0;
  if (list == "all") return kAllAlgorithms;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view name = list.substr(0, comma);
    if (name == "bfs") bits |= kBfs;
    else if (name == "pr") bits |= kPageRank;
    else if (name == "sssp") bits |= kSssp;
    else if (name == "cc") bits |= kCc;
    else throw Error(Errc::invalid_argument, "unknown algorithm '" + std::string(name) + "'");
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return bits;
}

ReportFormat parse_report_format(std::string_view name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "tsv") return ReportFormat::tsv;
  throw Error(Errc::invalid_argument, "unknown report format '" + std::string(name) + "'");
}

const std::vector<std::string>& report_columns() {
  static const std::vector<std::string> cols = {
      "format",          "kind",           "batch",          "phase",
      "edges",           "update_seconds", "update_eps",     "analytics_seconds",
      "analytics_eps",   "bfs_seconds",    "pr_seconds",     "sssp_seconds",
      "cc_seconds",      "live_edges",     "memory_bytes",   "bytes_per_edge",
      "probe_samples",   "probe_mean",     "probe_le8_fraction",
      "geomean_insert_eps", "geomean_delete_eps", "geomean_analytics_eps",
  };
  return cols;
}

namespace {

char delimiter(ReportFormat fmt) { return fmt == ReportFormat::csv ? ',' : '\t'; }

// Shortest representation that parses back to the same double.
std::string num(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}
std::string num(std::uint64_t v) { return std::to_string(v); }

class RowWriter {
 public:
  RowWriter(std::ostream& out, char sep) : out_(out), sep_(sep) {}
  template <class T>
  RowWriter& operator<<(const T& v) {
    if (!first_) out_ << sep_;
    first_ = false;
    if constexpr (std::is_same_v<T, double> || std::is_same_v<T, std::uint64_t>) {
      out_ << num(v);
    } else {
      out_ << v;
    }
    return *this;
  }
  void end() {
    out_ << '\n';
    first_ = true;
  }

 private:
  std::ostream& out_;
  char sep_;
  bool first_ = true;
};

void write_row(RowWriter& w, Format f, std::string_view kind, const BatchReport& r,
               const ExperimentSummary* s) {
  w << to_string(f) << kind << r.batch << to_string(r.phase) << r.edges << r.update_seconds
    << r.update_eps << r.analytics_seconds << r.analytics_eps << r.bfs_seconds << r.pr_seconds
    << r.sssp_seconds << r.cc_seconds << r.live_edges << r.memory_bytes << r.bytes_per_edge
    << r.probe_samples << r.probe_mean << r.probe_le8_fraction
    << (s ? s->geomean_insert_eps : 0.0) << (s ? s->geomean_delete_eps : 0.0)
    << (s ? s->geomean_analytics_eps : 0.0);
  w.end();
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const std::size_t p = line.find(sep);
    out.push_back(line.substr(0, p));
    if (p == std::string_view::npos) break;
    line.remove_prefix(p + 1);
  }
  return out;
}

template <class T>
T parse_field(std::string_view s, std::uint64_t line_no) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw Error(Errc::parse_error,
                "report line " + std::to_string(line_no) + ": bad number '" + std::string(s) + "'");
  }
  return v;
}

Phase parse_phase(std::string_view s, std::uint64_t line_no) {
  if (s == "insert") return Phase::insert;
  if (s == "delete") return Phase::erase;
  if (s == "summary") return Phase::summary;
  throw Error(Errc::parse_error, "report line " + std::to_string(line_no) + ": bad phase");
}

}  // namespace

void emit_report(std::ostream& out, const ExperimentResult& result, ReportFormat fmt) {
  const char sep = delimiter(fmt);
  out << "# " << kPageRankNote << '\n';
  RowWriter w(out, sep);
  for (const std::string& c : report_columns()) w << c;
  w.end();
  if (result.batches.empty()) return;

  BatchReport total;
  total.batch = result.batches.size();
  total.phase = Phase::summary;
  double probe_sum = 0, le8_sum = 0;
  for (const BatchReport& r : result.batches) {
    write_row(w, result.format, "batch", r, nullptr);
    total.edges += r.edges;
    total.bfs_seconds += r.bfs_seconds;
    total.pr_seconds += r.pr_seconds;
    total.sssp_seconds += r.sssp_seconds;
    total.cc_seconds += r.cc_seconds;
    total.probe_samples += r.probe_samples;
    probe_sum += r.probe_mean * static_cast<double>(r.probe_samples);
    le8_sum += r.probe_le8_fraction * static_cast<double>(r.probe_samples);
  }
  const ExperimentSummary& s = result.summary;
  total.update_seconds = s.total_update_seconds;
  total.update_eps = s.total_update_seconds > 0 ? static_cast<double>(total.edges) / s.total_update_seconds : 0.0;
  total.analytics_seconds = s.total_analytics_seconds;
  total.analytics_eps = s.geomean_analytics_eps;
  total.live_edges = s.final_live_edges;
  total.memory_bytes = s.peak_memory_bytes;
  total.bytes_per_edge = s.mean_bytes_per_edge;
  if (total.probe_samples > 0) {
    total.probe_mean = probe_sum / static_cast<double>(total.probe_samples);
    total.probe_le8_fraction = le8_sum / static_cast<double>(total.probe_samples);
  }
  write_row(w, result.format, "summary", total, &s);
  if (!out) throw Error(Errc::io_error, "report write failed");
}

void emit_report(const std::filesystem::path& path, const ExperimentResult& result,
                 ReportFormat fmt) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  emit_report(out, result, fmt);
  out.flush();
  if (!out) throw Error(Errc::io_error, "write to " + path.string() + " failed");
}

ExperimentResult read_report(std::istream& in, ReportFormat fmt) {
  const char sep = delimiter(fmt);
  const auto& cols = report_columns();
  ExperimentResult result;
  std::string line;
  std::uint64_t line_no = 0;
  bool header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto f = split(line, sep);
    if (!header) {
      if (f.size() != cols.size() || !std::equal(f.begin(), f.end(), cols.begin())) {
        throw Error(Errc::parse_error, "report line " + std::to_string(line_no) + ": unexpected header");
      }
      header = true;
      continue;
    }
    if (f.size() != cols.size()) {
      throw Error(Errc::parse_error, "report line " + std::to_string(line_no) + ": wrong column count");
    }
    result.format = parse_format(f[0]);
    BatchReport r;
    r.batch = parse_field<std::uint64_t>(f[2], line_no);
    r.phase = parse_phase(f[3], line_no);
    r.edges = parse_field<std::uint64_t>(f[4], line_no);
    r.update_seconds = parse_field<double>(f[5], line_no);
    r.update_eps = parse_field<double>(f[6], line_no);
    r.analytics_seconds = parse_field<double>(f[7], line_no);
    r.analytics_eps = parse_field<double>(f[8], line_no);
    r.bfs_seconds = parse_field<double>(f[9], line_no);
    r.pr_seconds = parse_field<double>(f[10], line_no);
    r.sssp_seconds = parse_field<double>(f[11], line_no);
    r.cc_seconds = parse_field<double>(f[12], line_no);
    r.live_edges = parse_field<std::uint64_t>(f[13], line_no);
    r.memory_bytes = parse_field<std::uint64_t>(f[14], line_no);
    r.bytes_per_edge = parse_field<double>(f[15], line_no);
    r.probe_samples = parse_field<std::uint64_t>(f[16], line_no);
    r.probe_mean = parse_field<double>(f[17], line_no);
    r.probe_le8_fraction = parse_field<double>(f[18], line_no);
    if (f[1] == "summary") {
      ExperimentSummary& s = result.summary;
      s.total_update_seconds = r.update_seconds;
      s.total_analytics_seconds = r.analytics_seconds;
      s.final_live_edges = r.live_edges;
      s.peak_memory_bytes = r.memory_bytes;
      s.mean_bytes_per_edge = r.bytes_per_edge;
      s.geomean_insert_eps = parse_field<double>(f[19], line_no);
      s.geomean_delete_eps = parse_field<double>(f[20], line_no);
      s.geomean_analytics_eps = parse_field<double>(f[21], line_no);
    } else if (f[1] == "batch") {
      (r.phase == Phase::insert ? result.summary.insert_batches : result.summary.delete_batches)++;
      result.batches.push_back(r);
    } else {
      throw Error(Errc::parse_error, "report line " + std::to_string(line_no) + ": bad row kind");
    }
  }
  if (!header) throw Error(Errc::parse_error, "report: missing header row");
  return result;
}

void emit_sweep(std::ostream& out, std::span<const SweepPoint> points, ReportFormat fmt) {
  RowWriter w(out, delimiter(fmt));
  out << "# " << kPageRankNote << '\n';
  w << "th1" << "geomean_insert_eps" << "geomean_delete_eps" << "geomean_analytics_eps"
    << "mean_bytes_per_edge" << "peak_memory_bytes" << "total_update_seconds"
    << "total_analytics_seconds";
  w.end();
  for (const SweepPoint& p : points) {
    const ExperimentSummary& s = p.summary;
    w << p.th1 << s.geomean_insert_eps << s.geomean_delete_eps << s.geomean_analytics_eps
      << s.mean_bytes_per_edge << s.peak_memory_bytes << s.total_update_seconds
      << s.total_analytics_seconds;
    w.end();
  }
  if (!out) throw Error(Errc::io_error, "sweep write failed");
}

void emit_sweep(const std::filesystem::path& path, std::span<const SweepPoint> points,
                ReportFormat fmt) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  emit_sweep(out, points, fmt);
  out.flush();
  if (!out) throw Error(Errc::io_error, "write to " + path.string() + " failed");
}

}  // namespace tango::bench
