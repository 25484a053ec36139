#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "hcr/io.hpp"

namespace hcr {

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

double parse_double(const std::string& s, const std::filesystem::path& path) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw IoError(path, "malformed number '" + s + "'");
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

}  // namespace

void write_snapshot_csv(const std::filesystem::path& path, std::size_t step,
                        const GridField& state, std::span<const double> p) {
  const std::size_t n = state.size();
  if (state.d.size() != n) throw std::invalid_argument("snapshot: f and d differ in length");
  if (n > 0 && p.size() + 1 < n) throw std::invalid_argument("snapshot: indicator too short");

  std::ofstream out = open_for_write(path);
  out << kSnapshotHeader << '\n';
  const std::string step_str = std::to_string(step);
  for (std::size_t i = 0; i < n; ++i) {
    out << step_str << ',' << i << ',' << format_double(static_cast<double>(i) * state.h) << ','
        << format_double(state.f[i]) << ',' << format_double(state.d[i]) << ',';
    if (i + 1 < n) out << format_double(p[i]);
    out << '\n';
  }
  finish(out, path);
}

void write_summary_csv(const std::filesystem::path& path,
                       std::span<const DiagnosticsRecord> records) {
  std::ofstream out = open_for_write(path);
  out << kSummaryHeader << '\n';
  for (const DiagnosticsRecord& r : records) {
    out << r.step << ',';
    if (r.l1_error) out << format_double(*r.l1_error);
    out << ',' << format_double(r.f_max) << ',' << format_double(r.f_min) << ','
        << r.pos_regions << ',' << r.neg_regions << '\n';
  }
  finish(out, path);
}

SnapshotRows read_snapshot_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::string line;
  if (!std::getline(in, line) || line != kSnapshotHeader) {
    throw IoError(path, "missing or unexpected header");
  }
  SnapshotRows rows;
  while (std::getline(in, line)) {
    const std::vector<std::string> fields = split_fields(line);
    if (fields.size() != 6) throw IoError(path, "expected 6 fields in '" + line + "'");
    rows.step = static_cast<std::size_t>(parse_double(fields[0], path));
    rows.x.push_back(parse_double(fields[2], path));
    rows.f.push_back(parse_double(fields[3], path));
    rows.d.push_back(parse_double(fields[4], path));
    if (!fields[5].empty()) rows.p.push_back(parse_double(fields[5], path));
  }
  return rows;
}

}  // namespace hcr
