#pragma once

#include "skein/delta_poly.hpp"
#include "skein/laurent.hpp"
#include "skein/rational.hpp"

namespace skein::alg {

// Quantum integer: bracket value of the closed n-colored strand. Satisfies
// delta(-1) = 0, delta(0) = 1, delta(m+1) = loop_weight * delta(m) - delta(m-1).
// Throws std::domain_error for n < -1. Cached per process.
const LaurentPoly& delta(int n);

// The same recurrence carried out in the abstract loop variable.
DeltaPoly delta_in_delta_var(int n);

// Bracket value of the theta closure of two trivalent vertices with one edge
// colored 1: delta(a_from) on a down transition, delta(a_to) on an up one.
// Arguments must be adjacent non-negative colors.
LaurentPoly theta_edge(int a_from, int a_to);

// theta(a_next, a_i, 1) / delta(a_next): delta(a_i)/delta(a_next) for a down
// step, 1 for an up step.
RationalFunc step_ratio(int a_i, int a_next);

}  // namespace skein::alg
