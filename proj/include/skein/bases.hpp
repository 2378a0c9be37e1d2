#pragma once

#include <vector>

#include "skein/tl.hpp"

namespace skein::bases {

// Admissible step sequence (a_1,...,a_n): a_1 = 1, a_n = h, adjacent entries
// differ by exactly 1, all entries non-negative. Labels both module bases and
// corresponds to a lattice path via the height sequence (0, a_1, ..., a_n).
struct StepTuple {
  int n = 0;
  int h = 0;
  std::vector<int> a;

  StepTuple() = default;
  StepTuple(int n_, int h_, std::vector<int> a_);  // validates

  bool operator==(const StepTuple& o) const { return a == o.a; }
};

enum class Ordering { less, equal, greater };

// Lexicographic comparison: s > t when they first differ at a position where
// s is larger. Throws std::domain_error on mismatched (n, h).
Ordering compare_tuples(const StepTuple& s, const StepTuple& t);

// All admissible tuples for (n, h) in descending order (maximum first).
// Empty when h > n, h < 0, or n and h have different parity.
std::vector<StepTuple> enumerate_tuples(int n, int h);

// Number of admissible tuples: the reflection-principle count
// C(n,(n+h)/2) - C(n,(n+h)/2+1), or 0 outside the valid range.
long long dimension(int n, int h);

// The crossing-free diagram of a tuple: an up step opens a new strand, a down
// step caps the new point against the nearest unmatched point to its left,
// and the h surviving strands run to the top points in order.
tl::PlanarMatching tuple_to_matching(const StepTuple& t);

// Natural-basis element: the bare matching with the terminal idempotent
// attached (trivial for h <= 1).
tl::TLElement b_element(const StepTuple& t);

// The bare matching with no idempotent at all.
tl::TLElement b_prime_element(const StepTuple& t);

// Orthogonal-basis element: the trivalent chain expanded into the diagram
// algebra, carrying an idempotent on every internal edge.
tl::TLElement d_element(const StepTuple& t);

}  // namespace skein::bases
