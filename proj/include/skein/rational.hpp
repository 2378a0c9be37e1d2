#pragma once

#include "skein/laurent.hpp"

namespace skein::alg {

// Reduced fraction of Laurent polynomials, the coefficient field of all skein
// computations. Canonical form: gcd(num, den) a unit, integer contents
// coprime, den an ordinary polynomial (min exponent 0) whose lowest
// coefficient is positive. Equal fractions have identical representations.
class RationalFunc {
 public:
  RationalFunc() : den_(LaurentPoly(1)) {}  // zero
  RationalFunc(LaurentPoly num) : num_(std::move(num)), den_(LaurentPoly(1)) {}
  RationalFunc(LaurentPoly num, LaurentPoly den);
  explicit RationalFunc(long c) : num_(LaurentPoly(c)), den_(LaurentPoly(1)) {}

  static RationalFunc zero() { return RationalFunc(); }
  static RationalFunc one() { return RationalFunc(LaurentPoly(1)); }

  // Fast path for callers that already hold a fully reduced pair (coprime
  // polynomials and coprime integer contents); only the unit and sign are
  // normalized here.
  static RationalFunc from_coprime(LaurentPoly num, LaurentPoly den);

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  friend RationalFunc operator+(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator-(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator*(const RationalFunc& a, const RationalFunc& b);
  friend RationalFunc operator/(const RationalFunc& a, const RationalFunc& b);
  RationalFunc operator-() const;
  RationalFunc& operator+=(const RationalFunc& o) { return *this = *this + o; }
  RationalFunc& operator-=(const RationalFunc& o) { return *this = *this - o; }
  RationalFunc& operator*=(const RationalFunc& o) { return *this = *this * o; }
  RationalFunc& operator/=(const RationalFunc& o) { return *this = *this / o; }

  // Canonical forms make equality a plain representation comparison.
  bool operator==(const RationalFunc& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const RationalFunc& o) const { return !(*this == o); }

  // Cross-multiplication equality; must agree with operator== and is used by
  // the property tests as the independent decision procedure.
  bool equals_cross(const RationalFunc& o) const {
    return num_ * o.den_ == o.num_ * den_;
  }

  // Exact evaluation; throws std::domain_error when the denominator vanishes.
  mpq_class eval(const mpq_class& a) const;

  std::string text() const;

 private:
  void reduce_();
  LaurentPoly num_, den_;
};

}  // namespace skein::alg
