#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "tsys/recursions.hpp"

namespace tsys {

/// Rows (n, value) with n = first_n, first_n + 1, ... and no gaps. Values
/// are decimal strings so integer and ratio series share one format.
class SeriesTable {
 public:
  explicit SeriesTable(std::string name, int first_n = 0) : name_(std::move(name)), next_n_(first_n) {}

  void push(std::string value) { rows_.emplace_back(next_n_++, std::move(value)); }
  void push(const BigCount& value) { push(value.get_str()); }

  const std::string& name() const { return name_; }
  const std::vector<std::pair<int, std::string>>& rows() const { return rows_; }

 private:
  std::string name_;
  int next_n_;
  std::vector<std::pair<int, std::string>> rows_;
};

/// num/den (den > 0) with exactly `digits` significant digits, rounded half
/// up, using only integer arithmetic.
std::string format_ratio(const BigCount& num, const BigCount& den, int digits = 12);

/// `.dat` layout: "n value\n" per row.
void write_dat(std::ostream& out, const SeriesTable& table);

enum class ExportSeries { L, T, Lmax, Tmax, Ratio };

const char* file_name(ExportSeries s);
/// Parses one of L, T, Lmax, Tmax, ratio.
ExportSeries parse_export_series(const std::string& name);

SeriesTable build_series(ExportSeries s, int max_n);

/// Writes the requested series to `<dir>/<file>` for n = 0..max_n and
/// returns the written paths. Creates `dir` if missing.
std::vector<std::filesystem::path> export_series(const std::vector<ExportSeries>& which, int max_n,
                                                 const std::filesystem::path& dir);

}  // namespace tsys
