#include "tsys/series.hpp"

#include "doctest.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace tsys;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_lines(const std::string& text, int count) {
  std::size_t pos = 0;
  for (int i = 0; i < count && pos != std::string::npos; ++i) {
    pos = text.find('\n', pos);
    if (pos != std::string::npos) ++pos;
  }
  return text.substr(0, pos);
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("tsys_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("ratio formatting") {
  CHECK(format_ratio(2, 2) == "1.00000000000");
  CHECK(format_ratio(9, 10) == "0.900000000000");
  CHECK(format_ratio(56, 68) == "0.823529411765");
  CHECK(format_ratio(1, 3) == "0.333333333333");
  CHECK(format_ratio(2, 3) == "0.666666666667");
  CHECK(format_ratio(1, 8, 2) == "0.13");         // 0.125 rounds half up
  CHECK(format_ratio(999, 1000, 2) == "1.0");     // carry into a new digit
  CHECK(format_ratio(9995, 1000, 3) == "10.0");
  CHECK(format_ratio(123456, 1, 3) == "123000");
  CHECK(format_ratio(1, 1000, 3) == "0.00100");
  CHECK(format_ratio(0, 7, 4) == "0.000");
  CHECK_THROWS_AS(format_ratio(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(format_ratio(1, 2, 0), std::invalid_argument);
}

TEST_CASE("ratio formatting has exactly the requested significant digits") {
  for (int num = 1; num <= 60; ++num)
    for (int den = 1; den <= 60; den += 7) {
      const std::string s = format_ratio(num, den);
      std::string digits;
      for (char ch : s)
        if (ch != '.') digits += ch;
      digits.erase(0, digits.find_first_not_of('0'));
      CHECK(digits.size() == 12);
    }
}

TEST_CASE("series tables") {
  SeriesTable t("demo");
  t.push(BigCount(5));
  t.push("0.5");
  REQUIRE(t.rows().size() == 2);
  CHECK(t.rows()[0] == std::pair<int, std::string>{0, "5"});
  CHECK(t.rows()[1].first == 1);
  std::ostringstream out;
  write_dat(out, t);
  CHECK(out.str() == "0 5\n1 0.5\n");
}

TEST_CASE("series names") {
  CHECK(parse_export_series("ratio") == ExportSeries::Ratio);
  CHECK(std::string(file_name(ExportSeries::Ratio)) == "ratio_LT.dat");
  CHECK(std::string(file_name(ExportSeries::Tmax)) == "Tmax.dat");
  CHECK_THROWS_AS(parse_export_series("Q"), std::invalid_argument);
}

TEST_CASE("built series agree with known values") {
  const auto l = build_series(ExportSeries::L, 10);
  CHECK(l.rows().back() == std::pair<int, std::string>{10, "3546142551"});
  const auto tmax = build_series(ExportSeries::Tmax, 3);
  CHECK(tmax.rows().back().second == "131");
  const auto ratio = build_series(ExportSeries::Ratio, 0);
  CHECK(ratio.rows().front().second == "1.00000000000");
}

TEST_CASE("exported files match the golden files for n <= 10") {
  const auto dir = scratch_dir("export");
  const std::vector<ExportSeries> all = {ExportSeries::L, ExportSeries::T, ExportSeries::Lmax, ExportSeries::Tmax,
                                         ExportSeries::Ratio};
  const auto written = export_series(all, 80, dir);
  REQUIRE(written.size() == 5);
  for (ExportSeries s : all) {
    const std::string produced = slurp(dir / file_name(s));
    const std::string golden = slurp(std::filesystem::path(TSYS_GOLDEN_DIR) / file_name(s));
    REQUIRE_FALSE(golden.empty());
    CHECK(first_lines(produced, 11) == golden);
    CHECK(std::count(produced.begin(), produced.end(), '\n') == 81);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("export is deterministic") {
  const auto a = scratch_dir("det_a"), b = scratch_dir("det_b");
  export_series({ExportSeries::Ratio, ExportSeries::T}, 30, a);
  export_series({ExportSeries::Ratio, ExportSeries::T}, 30, b);
  CHECK(slurp(a / "ratio_LT.dat") == slurp(b / "ratio_LT.dat"));
  CHECK(slurp(a / "T.dat") == slurp(b / "T.dat"));
  std::filesystem::remove_all(a);
  std::filesystem::remove_all(b);
}
