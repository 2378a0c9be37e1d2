#pragma once

#include <utility>
#include <vector>

#include "skein/bases.hpp"
#include "skein/delta_poly.hpp"
#include "skein/exec.hpp"
#include "skein/rational.hpp"
#include "skein/tl.hpp"

namespace skein::gram {

using alg::DeltaPoly;
using alg::RationalFunc;

enum class Basis { B, D };
enum class MeanderKind { S, T };

// Labeled square matrix of the bilinear form, rows and columns in descending
// tuple order.
struct GramMatrix {
  int n = 0, h = 0;
  Basis basis = Basis::B;
  std::vector<bases::StepTuple> labels;
  std::vector<std::vector<RationalFunc>> entries;

  int dim() const { return static_cast<int>(labels.size()); }
};

// Semi-meander matrix over the loop-variable polynomial ring.
struct MeanderMatrix {
  int n = 0, h = 0;
  MeanderKind kind = MeanderKind::S;
  std::vector<bases::StepTuple> labels;
  std::vector<std::vector<DeltaPoly>> entries;

  int dim() const { return static_cast<int>(labels.size()); }
};

// G(x, y): glue the mirror of y on top of x through the h-colored idempotent
// and evaluate the closure. Bilinear in both arguments.
RationalFunc gram_pair(const tl::TLElement& x, const tl::TLElement& y);

// Matrix of the form over the chosen basis. Throws std::domain_error when the
// module is zero. Entry computation is parallel over (row, column) pairs
// under Exec::parallel.
GramMatrix gram_matrix(int n, int h, Basis basis, Exec ex = Exec::parallel);

// Closed form of G(D_t, D_t): delta(h) times the product of the step ratios
// along the tuple.
RationalFunc d_diagonal_closed(const bases::StepTuple& t);

// Change-of-basis matrix expressing the natural basis in the orthogonal one;
// upper triangular with unit diagonal in descending tuple order.
GramMatrix transform_matrix(int n, int h, Exec ex = Exec::parallel);

// Exact determinant. Fraction-free elimination after clearing row
// denominators; large dimensions go through the evaluation-interpolation
// kernel. Agrees with cofactor expansion.
RationalFunc det_fraction_free(const GramMatrix& m, Exec ex = Exec::parallel);
DeltaPoly det_fraction_free(const MeanderMatrix& m, Exec ex = Exec::parallel);

// Closed form of the natural-basis determinant:
// delta(h)^dim * prod_k (delta(k)/delta(k-1))^alpha_k.
RationalFunc det_closed(int n, int h);

struct DetFactored {
  long long delta_h_power = 0;                       // exponent of delta(h)
  std::vector<std::pair<int, long long>> ratio_powers;  // (k, alpha_k), alpha_k > 0
};
DetFactored det_closed_factored(int n, int h);

// delta^c(a,b) where c counts the loops of the closed gluing of a and b; with
// `restricted`, 0 unless the h top junction points lie on h distinct loops.
DeltaPoly meander_pair(const tl::PlanarMatching& a, const tl::PlanarMatching& b,
                       bool restricted);

// Matrix of meander_pair over the bare-matching basis; restricted iff S.
MeanderMatrix meander_matrix(int n, int h, MeanderKind kind,
                             Exec ex = Exec::parallel);

// Closed form of det(S): (delta(1)^h / delta(h))^dim * det_closed(n, h),
// under the all-loops counting convention.
RationalFunc det_s_closed(int n, int h);

// --- exact numeric tier (evaluation at a rational point) ------------------

// Natural-basis Gram determinant with every entry exactly evaluated at
// A = a_value before elimination (multimodular CRT on the cleared integer
// matrix).
mpq_class det_b_matrix_at(int n, int h, const mpq_class& a_value,
                          Exec ex = Exec::parallel);

// Product of the closed diagonal norms, exactly evaluated.
mpq_class d_diagonal_product_at(int n, int h, const mpq_class& a_value);

// Closed-form determinant, exactly evaluated.
mpq_class det_closed_at(int n, int h, const mpq_class& a_value);

}  // namespace skein::gram
