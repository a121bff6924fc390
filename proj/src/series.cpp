#include "tsys/series.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

namespace tsys {

namespace {

BigCount pow10(long e) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// round(num * 10^shift / den), half up; shift may be negative.
BigCount scaled_round(const BigCount& num, const BigCount& den, long shift) {
  BigCount n = num, d = den;
  if (shift >= 0) n *= pow10(shift); else d *= pow10(-shift);
  BigCount q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (2 * r >= d) q += 1;
  return q;
}

}  // namespace

std::string format_ratio(const BigCount& num, const BigCount& den, int digits) {
  if (den <= 0 || num < 0 || digits < 1) throw std::invalid_argument("format_ratio: bad arguments");
  if (num == 0) return "0." + std::string(static_cast<std::size_t>(digits - 1), '0');

  // Choose shift so that 10^(digits-1) <= round(num * 10^shift / den) < 10^digits.
  const BigCount low = pow10(digits - 1), high = pow10(digits);
  long shift = static_cast<long>(digits) - 1 -
               (static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 10)) -
                static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 10)));
  BigCount q = scaled_round(num, den, shift);
  while (q >= high) q = scaled_round(num, den, --shift);
  while (q < low) q = scaled_round(num, den, ++shift);
  // Rounding up can carry into an extra digit.
  if (q >= high) q = scaled_round(num, den, --shift);

  const std::string d = q.get_str();
  const long point = static_cast<long>(d.size()) - shift;  // digits before the decimal point
  if (point <= 0) return "0." + std::string(static_cast<std::size_t>(-point), '0') + d;
  if (point >= static_cast<long>(d.size())) return d + std::string(static_cast<std::size_t>(point) - d.size(), '0');
  return d.substr(0, static_cast<std::size_t>(point)) + "." + d.substr(static_cast<std::size_t>(point));
}

void write_dat(std::ostream& out, const SeriesTable& table) {
  for (const auto& [n, value] : table.rows()) out << n << ' ' << value << '\n';
}

const char* file_name(ExportSeries s) {
  switch (s) {
    case ExportSeries::L: return "L.dat";
    case ExportSeries::T: return "T.dat";
    case ExportSeries::Lmax: return "Lmax.dat";
    case ExportSeries::Tmax: return "Tmax.dat";
    case ExportSeries::Ratio: return "ratio_LT.dat";
  }
  return "";
}

ExportSeries parse_export_series(const std::string& name) {
  if (name == "L") return ExportSeries::L;
  if (name == "T") return ExportSeries::T;
  if (name == "Lmax") return ExportSeries::Lmax;
  if (name == "Tmax") return ExportSeries::Tmax;
  if (name == "ratio") return ExportSeries::Ratio;
  throw std::invalid_argument("unknown series `" + name + "` (expected L, T, Lmax, Tmax or ratio)");
}

SeriesTable build_series(ExportSeries s, int max_n) {
  if (max_n < 0) throw std::invalid_argument("build_series: max_n must be nonnegative");
  SeriesTable table(file_name(s));
  const auto lift = strata_table(Family::Liftable, max_n);
  const auto all = strata_table(Family::All, max_n);
  for (int n = 0; n <= max_n; ++n) {
    switch (s) {
      case ExportSeries::L: table.push(lift->total(n)); break;
      case ExportSeries::T: table.push(all->total(n)); break;
      case ExportSeries::Lmax: {
        BigCount sum = 0;
        for (int k = 1; k <= n + 1; ++k) sum += lift->aggregate(n, k, n + 1);
        table.push(sum);
        break;
      }
      case ExportSeries::Tmax: {
        BigCount sum = 0;
        for (int k = 1; k <= n + 1; ++k) sum += all->aggregate(n, k, n + 1);
        table.push(sum);
        break;
      }
      case ExportSeries::Ratio: table.push(format_ratio(lift->total(n), all->total(n))); break;
    }
  }
  return table;
}

std::vector<std::filesystem::path> export_series(const std::vector<ExportSeries>& which, int max_n,
                                                 const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  for (ExportSeries s : which) {
    const auto path = dir / file_name(s);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_dat(out, build_series(s, max_n));
    if (!out) throw std::runtime_error("failed writing " + path.string());
    written.push_back(path);
  }
  return written;
}

}  // namespace tsys
