#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace skein::alg {

using Int = mpz_class;

// Exact Laurent polynomial in the bracket variable A with arbitrary-precision
// integer coefficients. Canonical form: terms sorted by ascending exponent,
// no zero coefficient stored, the zero polynomial is the empty term list.
class LaurentPoly {
 public:
  using Term = std::pair<int, Int>;  // (exponent, coefficient)

  LaurentPoly() = default;
  explicit LaurentPoly(long c) { if (c != 0) terms_.emplace_back(0, Int(c)); }
  explicit LaurentPoly(Int c) { if (c != 0) terms_.emplace_back(0, std::move(c)); }

  static LaurentPoly monomial(Int c, int e);
  // Builds from an arbitrary term list (merges duplicates, drops zeros).
  static LaurentPoly from_terms(std::vector<Term> terms);
  // The loop weight -A^-2 - A^2.
  static LaurentPoly loop_weight();

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  int min_exp() const;  // pre: nonzero
  int max_exp() const;  // pre: nonzero
  Int coeff(int e) const;
  const Int& lowest_coeff() const;  // pre: nonzero

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  LaurentPoly scaled(const Int& c) const;
  LaurentPoly shifted(int k) const;          // multiply by A^k
  LaurentPoly invert_variable() const;       // A -> A^-1
  LaurentPoly pow(unsigned long e) const;

  // gcd of the absolute coefficient values (0 for the zero polynomial).
  Int content() const;

  // Exact division; returns false when den does not divide num over Z[A,A^-1].
  static bool try_divide(const LaurentPoly& num, const LaurentPoly& den,
                         LaurentPoly& quot);
  // Exact division; throws std::domain_error when not divisible or den = 0.
  static LaurentPoly divide_exact(const LaurentPoly& num, const LaurentPoly& den);

  // Greatest common divisor up to units, returned as an ordinary polynomial
  // (min exponent 0) with positive lowest coefficient; includes the integer
  // content gcd. gcd(0,0) = 0.
  static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

  // Exact evaluation at a rational point (nonzero when negative exponents
  // are present).
  mpq_class eval(const mpq_class& a) const;

  // True when invariant under A -> A^-1 and supported on even exponents.
  bool is_symmetric_even() const;

  std::string text() const;  // canonical rendering, e.g. "-A^-2 - A^2"

 private:
  std::vector<Term> terms_;
};

}  // namespace skein::alg
