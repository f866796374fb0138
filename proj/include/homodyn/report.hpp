#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "homodyn/orbit_series.hpp"

namespace homodyn {

using Cell = std::variant<double, std::int64_t, std::string>;

class ExperimentReport {
 public:
  ExperimentReport() = default;
  ExperimentReport(std::string name, std::vector<std::string> columns);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  const std::vector<std::pair<std::string, std::string>>& params() const { return params_; }
  const std::string& notes() const { return notes_; }

  void set_param(const std::string& key, const std::string& value);
  void set_param(const std::string& key, double value);
  void set_param(const std::string& key, std::int64_t value);
  void set_param(const std::string& key, int value) { set_param(key, static_cast<std::int64_t>(value)); }
  std::optional<std::string> param(const std::string& key) const;

  void add_row(std::vector<Cell> row);
  void add_note(const std::string& line);

  std::size_t column_index(const std::string& column) const;
  double number(std::size_t row, const std::string& column) const;
  std::vector<double> column(const std::string& column) const;

 private:
  std::string name_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, std::string>> params_;
  std::string notes_;
};

std::string format_number(double v);  // 12 significant digits, C locale
std::string format_cell(const Cell& c);

std::string to_csv(const ExperimentReport& report, std::uint64_t seed);
void emit_csv(const ExperimentReport& report, const std::string& path, std::uint64_t seed);

// Scatter of z_reduced over the fixed viewBox [-0.6,0.6] x [0.8,4].
std::string to_svg(std::span<const UpperHalfPoint> points);
std::string to_svg(const OrbitSeries& series);
void emit_svg(const OrbitSeries& series, const std::string& path);

}  // namespace homodyn
