#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein::gf {

using alg::Int;

// Polynomial in the statistic variable q with big-integer coefficients.
class QPoly {
 public:
  using Term = std::pair<int, Int>;

  QPoly() = default;
  explicit QPoly(long c) { if (c != 0) terms_.emplace_back(0, Int(c)); }
  explicit QPoly(Int c) { if (c != 0) terms_.emplace_back(0, std::move(c)); }
  static QPoly monomial(Int c, int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  Int coeff(int e) const;

  friend QPoly operator+(const QPoly& a, const QPoly& b);
  friend QPoly operator-(const QPoly& a, const QPoly& b);
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  bool operator==(const QPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  Int eval_at_one() const;       // sum of coefficients
  Int weighted_sum() const;      // sum of m * coeff(m): d/dq at q = 1

 private:
  std::vector<Term> terms_;
};

// Power series in x truncated above a fixed order, with QPoly coefficients.
class TruncSeries {
 public:
  TruncSeries() = default;
  explicit TruncSeries(int order) : order_(order), c_(order + 1) {}
  static TruncSeries one(int order);
  static TruncSeries x_power(int order, int k);  // x^k

  int order() const { return order_; }
  const QPoly& coeff(int n) const { return c_[n]; }
  void set_coeff(int n, QPoly v) { c_[n] = std::move(v); }

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  bool operator==(const TruncSeries& o) const {
    return order_ == o.order_ && c_ == o.c_;
  }
  bool operator!=(const TruncSeries& o) const { return !(*this == o); }

  TruncSeries scaled(const QPoly& q) const;
  TruncSeries shifted(int k) const;  // multiply by x^k
  // Multiplicative inverse; requires constant coefficient exactly 1.
  TruncSeries inverse() const;
  TruncSeries pow(int e) const;
  // Collapse q -> 1 coefficientwise.
  TruncSeries at_q_one() const;
  // d/dq at q = 1, coefficientwise.
  std::vector<Int> dq_at_one() const;

 private:
  int order_ = 0;
  std::vector<QPoly> c_;
};

// Dense integer polynomial in one variable t.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> c);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return c_; }
  Int coeff(int e) const;
  mpq_class eval(const mpq_class& t) const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }
  bool operator!=(const IntPoly& o) const { return !(*this == o); }

 private:
  std::vector<Int> c_;
};

// Chebyshev polynomial of the second kind: U_{-1} = 0, U_0 = 1, U_1 = 2t,
// U_m = 2t U_{m-1} - U_{m-2}. Throws std::domain_error for m < -1.
IntPoly chebyshev_u(int m);

// The unique series solution of C = 1 + x^2 C^2 (q-free); the coefficient of
// x^{2n} is the n-th Catalan number.
TruncSeries catalan_series(int order);

// Dyck-path series with the k-down-step count marked by q, solved from the
// first-return fixed points. k >= 1.
TruncSeries ck_series(int k, int order);

// The same series from the closed Chebyshev quotient; negative powers are
// cleared before the series division.
TruncSeries ck_closed_series(int k, int order);

// Bivariate statistic series for paths ending at height h, via the closed
// product forms. k >= 0, h >= 0.
TruncSeries ckh_series(int k, int h, int order);

// Independent route: the first-return recurrences solved by iteration.
TruncSeries ckh_series_recurrence(int k, int h, int order);

// Total k-down-step count at length n extracted from the series; the
// generating-function route to the closed step count. k >= 1.
Int down_step_count_gf(int n, int h, int k);

// Closed count of k-down steps over all paths (0,0) -> (2n,0):
// (2k+1)/(2n+1) * C(2n+1, n+k+1).
Int corollary_count(int n, int k);

}  // namespace skein::gf
