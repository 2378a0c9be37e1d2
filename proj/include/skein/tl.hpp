#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/exec.hpp"
#include "skein/rational.hpp"

namespace skein::tl {

using alg::RationalFunc;

// Crossing-free perfect matching on n_bottom + n_top boundary points of a
// square. Bottom points are numbered 0..n_bottom-1 left to right, top points
// n_bottom..n_bottom+n_top-1 left to right. Construction validates planarity
// by a stack scan of the boundary cycle.
class PlanarMatching {
 public:
  PlanarMatching(int n_bottom, int n_top, std::vector<int> partner);

  static PlanarMatching identity(int n);
  static PlanarMatching e_diagram(int n, int i);  // cup-cap generator, 1 <= i <= n-1
  static PlanarMatching cup();                    // 2 -> 0
  static PlanarMatching cap();                    // 0 -> 2

  int n_bottom() const { return nb_; }
  int n_top() const { return nt_; }
  int points() const { return nb_ + nt_; }
  int partner(int p) const { return partner_[p]; }
  const std::vector<int>& partners() const { return partner_; }
  bool is_bottom(int p) const { return p < nb_; }

  bool operator==(const PlanarMatching& o) const {
    return nb_ == o.nb_ && nt_ == o.nt_ && partner_ == o.partner_;
  }
  bool operator<(const PlanarMatching& o) const;

 private:
  int nb_, nt_;
  std::vector<int> partner_;
};

struct ComposedMatching {
  PlanarMatching matching;
  int loops;
};

// Glues x's top boundary to y's bottom boundary; counts the closed loops
// formed in the middle.
ComposedMatching compose_matchings(const PlanarMatching& x, const PlanarMatching& y);

struct GlueCycles {
  int cycles = 0;
  bool tops_distinct = true;  // the n_top junction points lie on distinct loops
};

// Closes a against b along both boundary groups (bottom-to-bottom and
// top-to-top); the result is a collection of loops.
GlueCycles glue_cycles(const PlanarMatching& a, const PlanarMatching& b);

// All crossing-free matchings with the given boundary, in a deterministic
// order. For n_bottom = n_top = n this is the diagram basis of TL_n.
std::vector<PlanarMatching> enumerate_matchings(int n_bottom, int n_top);

// Formal linear combination of planar matchings over the fraction field.
class TLElement {
 public:
  using Combo = std::map<PlanarMatching, RationalFunc>;

  TLElement(int n_bottom, int n_top) : nb_(n_bottom), nt_(n_top) {}
  explicit TLElement(const PlanarMatching& m);

  static TLElement identity(int n);
  static TLElement generator_e(int n, int i);

  int n_bottom() const { return nb_; }
  int n_top() const { return nt_; }
  const Combo& combo() const { return combo_; }
  bool is_zero() const { return combo_.empty(); }
  std::size_t size() const { return combo_.size(); }

  void add_term(const PlanarMatching& m, const RationalFunc& c);

  friend TLElement operator+(const TLElement& a, const TLElement& b);
  friend TLElement operator-(const TLElement& a, const TLElement& b);
  TLElement scaled(const RationalFunc& c) const;
  bool operator==(const TLElement& o) const {
    return nb_ == o.nb_ && nt_ == o.nt_ && combo_ == o.combo_;
  }
  bool operator!=(const TLElement& o) const { return !(*this == o); }

 private:
  int nb_, nt_;
  Combo combo_;
};

// Diagram stacking extended bilinearly; each closed loop contributes one
// factor of the loop weight.
TLElement compose(const TLElement& x, const TLElement& y,
                  Exec ex = Exec::serial);
// Horizontal juxtaposition (x left of y).
TLElement tensor(const TLElement& x, const TLElement& y);
// Reflection across a horizontal axis; coefficients unchanged.
TLElement mirror(const TLElement& x);
// Connects top i to bottom i around the side for every i; each loop is worth
// one factor of the loop weight.
RationalFunc trace_closure(const TLElement& x);

// The n-th Jones-Wenzl idempotent, computed by the one-strand recursion and
// memoized per process (transparently; results match an uncached run).
const TLElement& jones_wenzl(int n);

struct TangleLetter {
  enum class Kind { e, sigma_pos, sigma_neg };
  Kind kind;
  int i;  // 1-based position
};

struct TangleWord {
  int n = 0;
  std::vector<TangleLetter> letters;
};

// Eliminates crossings eagerly: sigma_pos(i) -> A*id + A^-1*e_i,
// sigma_neg(i) -> A^-1*id + A*e_i; letters compose in sequence.
TLElement bracket_evaluate(const TangleWord& w);

}  // namespace skein::tl
