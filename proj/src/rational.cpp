#include "skein/rational.hpp"

#include <stdexcept>

namespace skein::alg {

RationalFunc::RationalFunc(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  reduce_();
}

RationalFunc RationalFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
  if (den.is_zero()) throw std::domain_error("division by zero polynomial");
  RationalFunc r;
  if (num.is_zero()) return r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  const int s = r.den_.min_exp();
  if (s != 0) {
    r.num_ = r.num_.shifted(-s);
    r.den_ = r.den_.shifted(-s);
  }
  if (r.den_.lowest_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

void RationalFunc::reduce_() {
  if (den_.is_zero()) throw std::domain_error("division by zero polynomial");
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  if (!den_.is_one()) {
    LaurentPoly g = LaurentPoly::gcd(num_, den_);
    if (!g.is_one()) {
      num_ = LaurentPoly::divide_exact(num_, g);
      den_ = LaurentPoly::divide_exact(den_, g);
    }
    // Absorb the unit A^s into the numerator.
    const int s = den_.min_exp();
    if (s != 0) {
      num_ = num_.shifted(-s);
      den_ = den_.shifted(-s);
    }
  }
  if (den_.lowest_coeff() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RationalFunc operator+(const RationalFunc& a, const RationalFunc& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_.is_one() && b.den_.is_one()) {
    RationalFunc r;
    r.num_ = a.num_ + b.num_;
    if (r.num_.is_zero()) return RationalFunc::zero();
    return r;
  }
  if (a.den_ == b.den_) return RationalFunc(a.num_ + b.num_, a.den_);
  return RationalFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunc operator-(const RationalFunc& a, const RationalFunc& b) {
  return a + (-b);
}

RationalFunc RationalFunc::operator-() const {
  RationalFunc r(*this);
  r.num_ = -r.num_;
  return r;
}

RationalFunc operator*(const RationalFunc& a, const RationalFunc& b) {
  if (a.is_zero() || b.is_zero()) return RationalFunc::zero();
  if (a.den_.is_one() && b.den_.is_one()) {
    RationalFunc r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  // Cross-reduce before multiplying to keep intermediates small; the factors
  // are already internally reduced, so the products stay coprime up to units.
  LaurentPoly g1 = LaurentPoly::gcd(a.num_, b.den_);
  LaurentPoly g2 = LaurentPoly::gcd(b.num_, a.den_);
  LaurentPoly n1 = g1.is_one() ? a.num_ : LaurentPoly::divide_exact(a.num_, g1);
  LaurentPoly d2 = g1.is_one() ? b.den_ : LaurentPoly::divide_exact(b.den_, g1);
  LaurentPoly n2 = g2.is_one() ? b.num_ : LaurentPoly::divide_exact(b.num_, g2);
  LaurentPoly d1 = g2.is_one() ? a.den_ : LaurentPoly::divide_exact(a.den_, g2);
  RationalFunc r;
  r.num_ = n1 * n2;
  r.den_ = d1 * d2;
  const int s = r.den_.min_exp();
  if (s != 0) {
    r.num_ = r.num_.shifted(-s);
    r.den_ = r.den_.shifted(-s);
  }
  if (r.den_.lowest_coeff() < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

RationalFunc operator/(const RationalFunc& a, const RationalFunc& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  RationalFunc inv;
  inv.num_ = b.den_;
  inv.den_ = b.num_;
  const int s = inv.den_.min_exp();
  if (s != 0) {
    inv.num_ = inv.num_.shifted(-s);
    inv.den_ = inv.den_.shifted(-s);
  }
  if (inv.den_.lowest_coeff() < 0) {
    inv.num_ = -inv.num_;
    inv.den_ = -inv.den_;
  }
  return a * inv;
}

mpq_class RationalFunc::eval(const mpq_class& a) const {
  mpq_class d = den_.eval(a);
  if (d == 0) throw std::domain_error("rational function pole at evaluation point");
  mpq_class r = num_.eval(a) / d;
  r.canonicalize();
  return r;
}

std::string RationalFunc::text() const {
  if (den_.is_one()) return num_.text();
  return "(" + num_.text() + ") / (" + den_.text() + ")";
}

}  // namespace skein::alg
