#include "tsys/recursions.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace tsys {

namespace {

constexpr mp_bitcnt_t kFloatBits = 256;

BigCount factorial(long n) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigCount pow2(long n) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return r;
}

BigCount exact_div(const BigCount& num, const BigCount& den, const char* where) {
  if (den == 0) throw std::logic_error(std::string(where) + ": division by zero");
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error(std::string(where) + ": inexact division");
  BigCount q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

void addmul(BigCount& acc, const BigCount& a, const BigCount& b) {
  mpz_addmul(acc.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

const BigCount kZero{0};

}  // namespace

BigCount binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigCount catalan(long n) {
  if (n < 0) return 0;
  return exact_div(binomial(2 * n, n), n + 1, "catalan");
}

BigCount narayana(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return exact_div(binomial(n, k) * binomial(n, k - 1), n, "narayana");
}

BigCount tam(long n, long k) {
  if (n < 0 || k < 1 || k > n + 1) return 0;
  const BigCount num = 2 * factorial(2 * k + 1) * factorial(4 * n - 2 * k + 3);
  const BigCount den =
      factorial(k - 1) * factorial(k + 1) * factorial(n - k + 1) * factorial(3 * n - k + 4);
  return exact_div(num, den, "tam");
}

BigCount tam_total(long n) {
  if (n < 0) return 0;
  return exact_div(2 * binomial(4 * n + 5, n), BigCount((n + 1) * (n + 2)), "tam_total");
}

std::vector<BigCount> schroder_sequence(long max_n) {
  std::vector<BigCount> s;
  if (max_n < 0) return s;
  s.reserve(static_cast<std::size_t>(max_n) + 1);
  s.emplace_back(1);
  if (max_n >= 1) s.emplace_back(2);
  // The convolution recurrence only holds from n = 2: at n = 1 it would give 3.
  for (long n = 2; n <= max_n; ++n) {
    BigCount v = 3 * s[n - 1];
    for (long k = 1; k <= n - 2; ++k) addmul(v, s[k], s[n - k - 1]);
    s.push_back(std::move(v));
  }
  return s;
}

BigCount schroder_recurrence(long n) {
  if (n < 0) return 0;
  return schroder_sequence(n).back();
}

BigCount schroder_narayana(long n) {
  if (n < 0) return 0;
  if (n == 0) return 1;
  BigCount total = 0;
  for (long k = 1; k <= n; ++k) addmul(total, narayana(n, k), pow2(k));
  return total;
}

BigCount schroder(long n) {
  BigCount a = schroder_recurrence(n);
  if (a != schroder_narayana(n))
    throw std::logic_error("schroder: recurrence and Narayana sum disagree at n = " + std::to_string(n));
  return a;
}

BigCount refined_schroder_formula(long n, long k) {
  if (n < 1 || k < 1 || n < k) return 0;
  if (n == k) return pow2(n);
  BigCount sum = 0;
  for (long p = 1; p <= n - k; ++p) addmul(sum, binomial(n - k, p), binomial(n - 1 + p, p - 1));
  return exact_div(pow2(k) * k * sum, n - k, "refined_schroder_formula");
}

std::vector<std::vector<BigCount>> refined_schroder_triangle(long max_n) {
  std::vector<std::vector<BigCount>> rows;
  if (max_n < 0) return rows;
  rows.push_back({BigCount(1)});
  for (long n = 1; n <= max_n; ++n) {
    const auto& prev = rows.back();
    std::vector<BigCount> row(static_cast<std::size_t>(n) + 1, 0);
    // Suffix sums of the previous row: tail[k] = Σ_{p>=k} S_{n-1}(p).
    std::vector<BigCount> tail(static_cast<std::size_t>(n) + 2, 0);
    for (long p = n - 1; p >= 0; --p) tail[p] = tail[p + 1] + prev[p];
    for (long k = 1; k <= n; ++k) row[k] = 2 * prev[k - 1] + tail[k];
    rows.push_back(std::move(row));
  }
  return rows;
}

BigCount refined_schroder_recurrence(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return refined_schroder_triangle(n)[n][k];
}

BigCount refined_schroder(long n, long k) {
  BigCount f = refined_schroder_formula(n, k);
  if (n >= 1 && f != refined_schroder_recurrence(n, k))
    throw std::logic_error("refined_schroder: formula and recurrence disagree at (" +
                           std::to_string(n) + ", " + std::to_string(k) + ")");
  return f;
}

BigCount antichain_formula(long n) {
  if (n < 1) return 0;
  BigCount sum = 0;
  for (long i = 0; i < n; ++i) addmul(sum, binomial(2 * i + 1, i), binomial(2 * n - 1, n - i - 1));
  return exact_div(sum, 2 * n - 1, "antichain_formula");
}

std::vector<BigCount> antichain_recurrence_sequence(long max_n) {
  std::vector<BigCount> a(static_cast<std::size_t>(std::max(max_n, 0L)) + 1, 0);
  if (max_n < 1) return a;
  std::vector<BigCount> cat(static_cast<std::size_t>(max_n) + 1);
  for (long j = 0; j <= max_n; ++j) cat[j] = catalan(j);
  a[1] = 1;
  for (long n = 2; n <= max_n; ++n)
    for (long j = 1; j <= n - 1; ++j) a[n] += a[n - j] * (a[j] + cat[j - 1]);
  return a;
}

BigCount antichain_recurrence(long n) {
  if (n < 1) return 0;
  return antichain_recurrence_sequence(n)[n];
}

BigCount antichain(long n) {
  BigCount f = antichain_formula(n);
  if (f != antichain_recurrence(n))
    throw std::logic_error("antichain: formula and recurrence disagree at n = " + std::to_string(n));
  return f;
}

BigCount saturated_liftable_count(long n) {
  if (n < 0) return 0;
  return (n + 2) * pow2(n);
}

// ---------------------------------------------------------------------------

StrataTable::StrataTable(Family family, int max_n) : family_(family), max_n_(max_n) {
  if (max_n < 0) throw std::invalid_argument("StrataTable: max_n must be nonnegative");

  for (int m = 0; m < max_n; ++m) {
    std::vector<BigCount> row(static_cast<std::size_t>(m) + 2);
    for (int i = 0; i <= m + 1; ++i) row[i] = tam(m, i);
    tam_.push_back(std::move(row));
  }

  for (int n = 0; n <= max_n; ++n) {
    const std::size_t w = static_cast<std::size_t>(n) + 1;
    auto at = [w](int k, int l) { return static_cast<std::size_t>(k - 1) * w + (l - 1); };
    std::vector<BigCount> origin(w * w, 0), corner(w * w, 0), bottom(w * w, 0), agg(w * w, 0);

    if (n == 0) {
      // [1] x [0]: the system with (0,0) R (1,0) has minimal fibrant (0,0);
      // the discrete one has (1,0). Both have k = ℓ = 1.
      origin[0] = 1;
      corner[0] = 1;
    } else {
      const auto& prev = aggregate_[n - 1];
      auto prev_at = [n](int k, int l) { return static_cast<std::size_t>(k - 1) * n + (l - 1); };
      // origin(n,k,ℓ) = Σ_{k' >= k-1} agg(n-1,k',ℓ-1), a suffix sum over k'.
      for (int l = 2; l <= n + 1; ++l) {
        BigCount suffix = 0;
        for (int k = n + 1; k >= 1; --k) {
          const int kp = k - 1;  // newly included k'
          if (kp >= 1) suffix += prev[prev_at(kp, l - 1)];
          // k' ranges over [max(k-1,1), n]; for k = 1 that equals k = 2's range.
          origin[at(k, l)] = suffix;
        }
      }
      if (family_ == Family::Liftable) {
        // corner(n,k,ℓ) = Σ_{ℓ' >= ℓ-1} agg(n-1,k-1,ℓ').
        for (int k = 2; k <= n + 1; ++k) {
          BigCount suffix = 0;
          for (int l = n + 1; l >= 1; --l) {
            const int lp = l - 1;
            if (lp >= 1) suffix += prev[prev_at(k - 1, lp)];
            corner[at(k, l)] = suffix;
          }
        }
      } else {
        for (int k = 1; k <= n + 1; ++k)
          for (int l = 1; l <= n + 1; ++l) corner[at(k, l)] = origin[at(l, k)];
      }
    }

    // bottom(k,ℓ) = Σ_b |X(n,k,ℓ,(0,b))|.
    bottom = origin;
    for (int m = 0; m < n; ++m) {
      const int b = n - m;
      const auto& tams = tam_[b - 1];
      const auto& lower = origin_[m];
      const std::size_t lw = static_cast<std::size_t>(m) + 1;
      for (int j = 1; j <= m + 1; ++j)
        for (int l = 1; l <= m + 1; ++l) {
          const BigCount& z = lower[(j - 1) * lw + (l - 1)];
          if (z == 0) continue;
          for (int i = 1; i <= b; ++i) addmul(bottom[at(i + j, l)], tams[i], z);
        }
    }

    for (int k = 1; k <= n + 1; ++k)
      for (int l = 1; l <= n + 1; ++l)
        agg[at(k, l)] = family_ == Family::Liftable ? bottom[at(k, l)] + corner[at(k, l)]
                                                    : bottom[at(k, l)] + bottom[at(l, k)];

    origin_.push_back(std::move(origin));
    top_corner_.push_back(std::move(corner));
    aggregate_.push_back(std::move(agg));
  }
}

void StrataTable::check_level(int n) const {
  if (n > max_n_)
    throw std::out_of_range("StrataTable: level " + std::to_string(n) + " exceeds table size " +
                            std::to_string(max_n_));
}

bool StrataTable::in_range(int n, int k, int l) const {
  return n >= 0 && k >= 1 && k <= n + 1 && l >= 1 && l <= n + 1;
}

const BigCount& StrataTable::origin(int n, int k, int l) const {
  if (!in_range(n, k, l)) return kZero;
  return origin_[n][static_cast<std::size_t>(k - 1) * (n + 1) + (l - 1)];
}

const BigCount& StrataTable::top_corner(int n, int k, int l) const {
  if (!in_range(n, k, l)) return kZero;
  return top_corner_[n][static_cast<std::size_t>(k - 1) * (n + 1) + (l - 1)];
}

const BigCount& StrataTable::stored_aggregate(int n, int k, int l) const {
  if (!in_range(n, k, l)) return kZero;
  return aggregate_[n][static_cast<std::size_t>(k - 1) * (n + 1) + (l - 1)];
}

BigCount StrataTable::stratum(int n, int k, int l, GridElement e) const {
  if (!in_range(n, k, l) || e.a < 0 || e.a > 1 || e.b < 0 || e.b > n) return 0;
  check_level(n);
  if (e.a == 0) {
    if (e.b == 0) return origin(n, k, l);
    BigCount sum = 0;
    for (int i = 1; i <= std::min(k, e.b); ++i) addmul(sum, tam_[e.b - 1][i], origin(n - e.b, k - i, l));
    return sum;
  }
  if (e.b == n) return top_corner(n, k, l);
  if (family_ == Family::Liftable) return 0;
  return stratum(n, l, k, GridElement{0, n - e.b});
}

BigCount StrataTable::aggregate(int n, int k, int l) const {
  if (n >= 0) check_level(n);
  return stored_aggregate(n, k, l);
}

BigCount StrataTable::total(int n) const {
  check_level(n);
  BigCount sum = 0;
  for (const auto& v : aggregate_.at(n)) sum += v;
  return sum;
}

std::shared_ptr<const StrataTable> strata_table(Family family, int n) {
  if (n < 0) throw std::invalid_argument("strata_table: n must be nonnegative");
  static std::mutex mutex;
  static std::shared_ptr<const StrataTable> tables[2];
  std::lock_guard lock(mutex);
  auto& slot = tables[family == Family::Liftable ? 0 : 1];
  if (!slot || slot->max_n() < n) slot = std::make_shared<const StrataTable>(family, std::max(n, 12));
  return slot;
}

BigCount count_L_stratum(int n, int k, int l, GridElement e) {
  if (n < 0) return 0;
  return strata_table(Family::Liftable, n)->stratum(n, k, l, e);
}

BigCount count_T_stratum(int n, int k, int l, GridElement e) {
  if (n < 0) return 0;
  return strata_table(Family::All, n)->stratum(n, k, l, e);
}

BigCount count_L(int n) { return strata_table(Family::Liftable, n)->total(n); }
BigCount count_T(int n) { return strata_table(Family::All, n)->total(n); }

BigCount max_extendable_L(int n) {
  const auto table = strata_table(Family::Liftable, n);
  BigCount sum = 0;
  for (int k = 1; k <= n + 1; ++k) sum += table->aggregate(n, k, n + 1);
  if (sum != schroder(n + 1))
    throw std::logic_error("max_extendable_L: disagrees with S_{n+1} at n = " + std::to_string(n));
  return sum;
}

BigCount max_extendable_T(int n) {
  const auto table = strata_table(Family::All, n);
  BigCount sum = 0;
  for (int k = 1; k <= n + 1; ++k) sum += table->aggregate(n, k, n + 1);
  return sum;
}

BigCount max_stationary_T(int n) {
  const auto table = strata_table(Family::All, n);
  BigCount sum = 0;
  for (int l = 1; l <= n + 1; ++l) sum += table->aggregate(n, n + 1, l);
  if (sum != max_extendable_T(n))
    throw std::logic_error("max_stationary_T: differs from max_extendable_T at n = " + std::to_string(n));
  return sum;
}

// ---------------------------------------------------------------------------

namespace {

// arctan(1/x) by its Taylor series.
mpf_class arctan_inverse(unsigned long x) {
  mpf_class sum(0, kFloatBits), term(1, kFloatBits), eps(1, kFloatBits);
  mpf_div_2exp(eps.get_mpf_t(), eps.get_mpf_t(), kFloatBits + 8);
  term /= x;
  const unsigned long x2 = x * x;
  for (unsigned long k = 0;; ++k) {
    mpf_class piece(term / (2 * k + 1), kFloatBits);
    if (k % 2 == 0) sum += piece; else sum -= piece;
    if (piece < eps) break;
    term /= x2;
  }
  return sum;
}

mpf_class pi() {
  mpf_class p(16 * arctan_inverse(5) - 4 * arctan_inverse(239), kFloatBits);
  return p;
}

}  // namespace

mpf_class asymptotic_constant() {
  const mpf_class root2(sqrt(mpf_class(2, kFloatBits)), kFloatBits);
  const mpf_class inner(pi() * (3 * root2 - 4), kFloatBits);
  mpf_class c(root2 * (3 + 2 * root2), kFloatBits);
  c /= 2 * sqrt(inner);
  return c;
}

AsymptoticTrend asymptotic_ratio_trend(int max_n) {
  if (max_n < 1 || max_n > 200) throw std::invalid_argument("asymptotic_ratio_trend: max_n must be in [1, 200]");
  const auto s = schroder_sequence(max_n + 1);
  const mpf_class base(3 + sqrt(mpf_class(8, kFloatBits)), kFloatBits);
  const mpf_class c = asymptotic_constant();

  AsymptoticTrend trend;
  trend.increasing = true;
  trend.below_constant = true;
  mpf_class power(1, kFloatBits);
  for (int n = 1; n <= max_n; ++n) {
    power *= base;
    mpf_class nn(n, kFloatBits);
    mpf_class r(mpf_class(s[n + 1], kFloatBits) * nn * sqrt(nn), kFloatBits);
    r /= power;
    if (!trend.ratios.empty() && !(r > trend.ratios.back())) trend.increasing = false;
    if (!(r < c)) trend.below_constant = false;
    trend.ratios.push_back(r);
  }
  return trend;
}

std::string to_decimal(const mpf_class& x, int digits) {
  mp_exp_t exp = 0;
  std::string mant = x.get_str(exp, 10, static_cast<std::size_t>(digits));
  std::string sign;
  if (!mant.empty() && mant[0] == '-') {
    sign = "-";
    mant.erase(0, 1);
  }
  if (mant.empty()) return "0";
  mant.resize(static_cast<std::size_t>(digits), '0');
  if (exp <= 0) return sign + "0." + std::string(static_cast<std::size_t>(-exp), '0') + mant;
  if (exp >= digits) return sign + mant + std::string(static_cast<std::size_t>(exp - digits), '0');
  return sign + mant.substr(0, static_cast<std::size_t>(exp)) + "." + mant.substr(static_cast<std::size_t>(exp));
}

}  // namespace tsys
