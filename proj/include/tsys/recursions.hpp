#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "tsys/lattice.hpp"

namespace tsys {

/// Arbitrary-precision nonnegative count.
using BigCount = mpz_class;

// ---------------------------------------------------------------------------
// Closed formulas. All divisions are exact and checked at runtime; an
// inexact division throws std::logic_error.
// ---------------------------------------------------------------------------

BigCount binomial(long n, long k);
BigCount catalan(long n);
/// C(n,k) C(n,k-1) / n for 1 <= k <= n; 0 otherwise.
BigCount narayana(long n, long k);

/// Restricted Tamari intervals with k stationary elements. 0 unless
/// n >= 0 and 1 <= k <= n+1.
BigCount tam(long n, long k);
/// 2/((n+1)(n+2)) C(4n+5, n).
BigCount tam_total(long n);

/// Large Schröder number, evaluated by the convolution recurrence
/// (seeded with S_0 = 1, S_1 = 2) and by the Narayana sum; throws
/// std::logic_error if they disagree.
BigCount schroder(long n);
BigCount schroder_recurrence(long n);
BigCount schroder_narayana(long n);
/// S_0 .. S_max by the recurrence.
std::vector<BigCount> schroder_sequence(long max_n);

/// Royal n-paths with k diagonal returns: closed form.
BigCount refined_schroder_formula(long n, long k);
/// Same numbers from S_n(k) = 2 S_{n-1}(k-1) + sum_{p=k}^{n} S_{n-1}(p),
/// S_0(0) = 1. Returns rows 0..max_n, row n indexed by k = 0..n.
std::vector<std::vector<BigCount>> refined_schroder_triangle(long max_n);
BigCount refined_schroder_recurrence(long n, long k);
/// Formula value, checked against the recurrence.
BigCount refined_schroder(long n, long k);

/// Rooted subtrees of planar rooted trees with n nodes (n >= 1).
BigCount antichain_formula(long n);
/// A_1 .. A_max from A_n = sum_{j=1}^{n-1} A_{n-j} A_j + A_{n-j} Cat(j-1);
/// index 0 is unused and holds 0.
std::vector<BigCount> antichain_recurrence_sequence(long max_n);
BigCount antichain_recurrence(long n);
/// Formula value, checked against the recurrence.
BigCount antichain(long n);

/// (n+2) 2^n.
BigCount saturated_liftable_count(long n);

// ---------------------------------------------------------------------------
// Stratified recursions for transfer systems on [1] x [n].
// ---------------------------------------------------------------------------

enum class Family {
  Liftable,  // L(n)
  All,       // T(n)
};

/// Memo of the stratified counts for one family, filled bottom-up in n at
/// construction and immutable afterwards.
///
/// Per level n it stores, for 1 <= k, ℓ <= n+1:
///   origin(n,k,ℓ)    = |X(n,k,ℓ,(0,0))|
///   top_corner(n,k,ℓ) = |X(n,k,ℓ,(1,n))|
///   aggregate(n,k,ℓ) = Σ over all minimal fibrant elements
/// Every other stratum is a short convolution of stored values.
class StrataTable {
 public:
  StrataTable(Family family, int max_n);

  Family family() const { return family_; }
  int max_n() const { return max_n_; }

  /// |X(n,k,ℓ,(a,b))|; zero for out-of-range arguments.
  BigCount stratum(int n, int k, int l, GridElement e) const;
  /// |X(n,k,ℓ)|; zero for out-of-range arguments.
  BigCount aggregate(int n, int k, int l) const;
  /// |X(n)|.
  BigCount total(int n) const;

 private:
  const BigCount& origin(int n, int k, int l) const;
  const BigCount& top_corner(int n, int k, int l) const;
  const BigCount& stored_aggregate(int n, int k, int l) const;
  bool in_range(int n, int k, int l) const;
  void check_level(int n) const;

  Family family_;
  int max_n_;
  // tam_[m][i] = tam(m, i), m < max_n.
  std::vector<std::vector<BigCount>> tam_;
  // Per level, (n+1) x (n+1) row-major with k-1 major.
  std::vector<std::vector<BigCount>> origin_;
  std::vector<std::vector<BigCount>> top_corner_;
  std::vector<std::vector<BigCount>> aggregate_;
};

/// Shared table covering at least level n; grows (and is rebuilt) under a
/// lock when a larger level is requested.
std::shared_ptr<const StrataTable> strata_table(Family family, int n);

BigCount count_L_stratum(int n, int k, int l, GridElement e);
BigCount count_T_stratum(int n, int k, int l, GridElement e);
BigCount count_L(int n);
BigCount count_T(int n);

/// Σ_k |L(n,k,n+1)|; checked against S_{n+1}.
BigCount max_extendable_L(int n);
/// Σ_k |T(n,k,n+1)|.
BigCount max_extendable_T(int n);
/// Σ_ℓ |T(n,n+1,ℓ)|; checked against max_extendable_T.
BigCount max_stationary_T(int n);

/// |L^max(n)| n^{3/2} / (3+√8)^n for n = 1..max_n, evaluated with at least
/// 256 bits of mantissa.
struct AsymptoticTrend {
  std::vector<mpf_class> ratios;  // ratios[i] is for n = i + 1
  bool increasing = false;        // strictly increasing throughout
  bool below_constant = false;    // every ratio < C
};

/// C = √2 (3+2√2) / (2 √(π(3√2 − 4))) ≈ 4.720408926.
mpf_class asymptotic_constant();
AsymptoticTrend asymptotic_ratio_trend(int max_n);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const mpf_class& x, int digits);

}  // namespace tsys
