#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/laurent.hpp"

namespace skein::alg {

// Polynomial in the abstract loop variable delta with big-integer
// coefficients. Same canonical-form rules as LaurentPoly. Houses the
// semi-meander matrix entries and the delta-variable quantum integers.
class DeltaPoly {
 public:
  using Term = std::pair<int, Int>;

  DeltaPoly() = default;
  explicit DeltaPoly(long c) { if (c != 0) terms_.emplace_back(0, Int(c)); }
  explicit DeltaPoly(Int c) { if (c != 0) terms_.emplace_back(0, std::move(c)); }
  static DeltaPoly monomial(Int c, int e);

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  const std::vector<Term>& terms() const { return terms_; }
  int degree() const;  // pre: nonzero
  Int coeff(int e) const;

  friend DeltaPoly operator+(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator-(const DeltaPoly& a, const DeltaPoly& b);
  friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b);
  DeltaPoly operator-() const;
  bool operator==(const DeltaPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const DeltaPoly& o) const { return !(*this == o); }

  // Substitute delta -> -A^2 - A^-2.
  LaurentPoly substitute_loop_weight() const;

  std::string text() const;  // rendering in the variable "d"

 private:
  std::vector<Term> terms_;
};

// Rewrites a Laurent polynomial that is invariant under A -> A^-1 and
// supported on even exponents as a polynomial in the loop weight. Returns
// nullopt when the input is not of that shape.
std::optional<DeltaPoly> to_delta_poly(const LaurentPoly& p);

// Centers p by a unit A^s so that it becomes symmetric with even exponents,
// when possible.
std::optional<LaurentPoly> centered_symmetric_even(const LaurentPoly& p);

}  // namespace skein::alg
