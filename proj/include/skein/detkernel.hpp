#pragma once

#include <vector>

#include "skein/exec.hpp"
#include "skein/laurent.hpp"

namespace skein::detkernel {

using alg::Int;

// Dense univariate polynomial with integer coefficients; coeffs[i] is the
// coefficient of x^i, no trailing zeros, empty = 0.
using PolyZ = std::vector<Int>;

PolyZ poly_normalize(PolyZ p);
PolyZ poly_add(const PolyZ& a, const PolyZ& b);
PolyZ poly_sub(const PolyZ& a, const PolyZ& b);
PolyZ poly_mul(const PolyZ& a, const PolyZ& b);
// Exact division; throws std::domain_error when not divisible.
PolyZ poly_divide_exact(const PolyZ& a, const PolyZ& b);
Int poly_eval(const PolyZ& p, const Int& x);

// One-step fraction-free elimination with exact division pivoting; zero
// pivots handled by row swaps with sign tracking. Destroys m.
Int det_integer_bareiss(std::vector<std::vector<Int>> m);

// Multimodular determinant: LDL^T/LU elimination modulo 62-bit primes up to
// the Hadamard bound, recombined by CRT. Primes are processed in parallel
// under Exec::parallel.
Int det_integer_multimodular(const std::vector<std::vector<Int>>& m, Exec ex);

// Dispatches on dimension between the two exact integer routes.
Int det_integer(const std::vector<std::vector<Int>>& m, Exec ex);

// Fraction-free elimination over the polynomial ring.
PolyZ det_poly_bareiss(std::vector<std::vector<PolyZ>> m);

// Exact evaluation-interpolation: integer determinants at 0..D followed by
// Newton interpolation, where D bounds the determinant degree. Evaluation
// points are independent and run in parallel under Exec::parallel.
PolyZ det_poly_interp(const std::vector<std::vector<PolyZ>>& m, Exec ex);

// Dispatches on dimension between direct elimination and interpolation.
PolyZ det_poly(const std::vector<std::vector<PolyZ>>& m, Exec ex);

}  // namespace skein::detkernel
