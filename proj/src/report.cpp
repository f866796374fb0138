#include "homodyn/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "homodyn/errors.hpp"

#ifndef HOMODYN_VERSION
#define HOMODYN_VERSION "0.0.0"
#endif

namespace homodyn {

ExperimentReport::ExperimentReport(std::string name, std::vector<std::string> columns)
    : name_(std::move(name)), columns_(std::move(columns)) {}

void ExperimentReport::set_param(const std::string& key, const std::string& value) {
  for (auto& kv : params_) {
    if (kv.first == key) {
      kv.second = value;
      return;
    }
  }
  params_.emplace_back(key, value);
}

void ExperimentReport::set_param(const std::string& key, double value) { set_param(key, format_number(value)); }

void ExperimentReport::set_param(const std::string& key, std::int64_t value) {
  set_param(key, std::to_string(value));
}

std::optional<std::string> ExperimentReport::param(const std::string& key) const {
  for (const auto& kv : params_)
    if (kv.first == key) return kv.second;
  return std::nullopt;
}

void ExperimentReport::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw InvalidArgument("report '" + name_ + "': row has " + std::to_string(row.size()) + " cells, expected " +
                          std::to_string(columns_.size()));
  rows_.push_back(std::move(row));
}

void ExperimentReport::add_note(const std::string& line) {
  if (!notes_.empty()) notes_ += '\n';
  notes_ += line;
}

std::size_t ExperimentReport::column_index(const std::string& column) const {
  auto it = std::find(columns_.begin(), columns_.end(), column);
  if (it == columns_.end()) throw InvalidArgument("report '" + name_ + "' has no column '" + column + "'");
  return static_cast<std::size_t>(it - columns_.begin());
}

double ExperimentReport::number(std::size_t row, const std::string& column) const {
  const Cell& c = rows_.at(row).at(column_index(column));
  if (const auto* d = std::get_if<double>(&c)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
  throw InvalidArgument("report '" + name_ + "': column '" + column + "' is not numeric");
}

std::vector<double> ExperimentReport::column(const std::string& column) const {
  std::vector<double> out;
  out.reserve(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r) out.push_back(number(r, column));
  return out;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0) return "0";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

}  // namespace

std::string format_cell(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return csv_escape(std::get<std::string>(c));
}

std::string to_csv(const ExperimentReport& report, std::uint64_t seed) {
  std::string out = "# homodyn v" HOMODYN_VERSION " seed=" + std::to_string(seed) + "\n";
  for (std::size_t i = 0; i < report.columns().size(); ++i) {
    if (i) out += ',';
    out += csv_escape(report.columns()[i]);
  }
  out += '\n';
  for (const auto& row : report.rows()) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError("cannot open '" + path + "' for writing");
  f << text;
  f.close();
  if (!f) throw IoError("failed writing '" + path + "'");
}

}  // namespace

void emit_csv(const ExperimentReport& report, const std::string& path, std::uint64_t seed) {
  write_file(path, to_csv(report, seed));
}

std::string to_svg(std::span<const UpperHalfPoint> points) {
  constexpr double x_lo = -0.6, x_hi = 0.6, y_lo = 0.8, y_hi = 4.0;
  std::ostringstream s;
  s.imbue(std::locale::classic());
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x_lo << ' ' << -y_hi << ' ' << (x_hi - x_lo) << ' '
    << (y_hi - y_lo) << "\" width=\"600\" height=\"1600\">\n";
  // boundary of the standard fundamental domain
  s << "<path d=\"M -0.5 -4 L -0.5 -0.866025403784 A 1 1 0 0 1 0.5 -0.866025403784 L 0.5 -4\" "
       "fill=\"none\" stroke=\"#888\" stroke-width=\"0.004\"/>\n";
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& z : points) {
    double y = std::min(z.y, y_hi);
    char bx[32], by[32];
    std::snprintf(bx, sizeof bx, "%.6f", z.x);
    std::snprintf(by, sizeof by, "%.6f", -y);
    if (!seen.emplace(bx, by).second) continue;
    s << "<circle cx=\"" << bx << "\" cy=\"" << by << "\" r=\"0.006\" fill=\"#1f4e9c\"/>\n";
  }
  s << "</svg>\n";
  return s.str();
}

std::string to_svg(const OrbitSeries& series) {
  std::vector<UpperHalfPoint> zs;
  zs.reserve(series.points.size());
  for (const auto& p : series.points) zs.push_back(p.z_reduced);
  return to_svg(zs);
}

void emit_svg(const OrbitSeries& series, const std::string& path) { write_file(path, to_svg(series)); }

}  // namespace homodyn
