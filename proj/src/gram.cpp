#include "skein/gram.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <stdexcept>

#include "skein/detkernel.hpp"
#include "skein/paths.hpp"
#include "skein/quantum.hpp"

namespace skein::gram {

using alg::Int;
using alg::LaurentPoly;
using bases::StepTuple;
using detkernel::PolyZ;
using tl::PlanarMatching;
using tl::TLElement;

namespace {

const TLElement& jw_or_identity(int h) {
  static const TLElement empty = TLElement::identity(0);
  if (h == 0) return empty;
  return tl::jones_wenzl(h);
}

}  // namespace

RationalFunc gram_pair(const TLElement& x, const TLElement& y) {
  if (x.n_bottom() != y.n_bottom() || x.n_top() != y.n_top())
    throw std::domain_error("gram_pair: boundary mismatch");
  const int h = x.n_top();
  return trace_closure(compose(compose(x, jw_or_identity(h)), mirror(y)));
}

namespace {

std::vector<StepTuple> labels_or_throw(int n, int h) {
  if (bases::dimension(n, h) < 1) throw std::domain_error("module is zero");
  return bases::enumerate_tuples(n, h);
}

std::vector<std::vector<RationalFunc>> pairwise_entries(
    const std::vector<TLElement>& left, const std::vector<TLElement>& right,
    Exec ex) {
  const int rows = static_cast<int>(left.size());
  const int cols = static_cast<int>(right.size());
  std::vector<std::vector<RationalFunc>> entries(
      rows, std::vector<RationalFunc>(cols));
  if (ex == Exec::parallel) {
#pragma omp parallel for collapse(2) schedule(dynamic, 4)
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        entries[i][j] = gram_pair(left[i], right[j]);
  } else {
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j)
        entries[i][j] = gram_pair(left[i], right[j]);
  }
  return entries;
}

}  // namespace

GramMatrix gram_matrix(int n, int h, Basis basis, Exec ex) {
  GramMatrix out;
  out.n = n;
  out.h = h;
  out.basis = basis;
  out.labels = labels_or_throw(n, h);
  jw_or_identity(h);  // warm the idempotent cache before the parallel region
  std::vector<TLElement> elems;
  elems.reserve(out.labels.size());
  for (const StepTuple& t : out.labels)
    elems.push_back(basis == Basis::B ? bases::b_element(t) : bases::d_element(t));
  out.entries = pairwise_entries(elems, elems, ex);
  return out;
}

RationalFunc d_diagonal_closed(const StepTuple& t) {
  RationalFunc r{alg::delta(t.h)};
  for (int i = 0; i + 1 < t.n; ++i) r *= alg::step_ratio(t.a[i], t.a[i + 1]);
  return r;
}

GramMatrix transform_matrix(int n, int h, Exec ex) {
  GramMatrix out;
  out.n = n;
  out.h = h;
  out.basis = Basis::B;
  out.labels = labels_or_throw(n, h);
  jw_or_identity(h);
  std::vector<TLElement> bs, ds;
  for (const StepTuple& t : out.labels) {
    bs.push_back(bases::b_element(t));
    ds.push_back(bases::d_element(t));
  }
  out.entries = pairwise_entries(bs, ds, ex);
  for (std::size_t j = 0; j < out.labels.size(); ++j) {
    const RationalFunc norm = d_diagonal_closed(out.labels[j]);
    for (auto& row : out.entries) row[j] /= norm;
  }
  return out;
}

// --- closed-form determinants ----------------------------------------------

DetFactored det_closed_factored(int n, int h) {
  if (bases::dimension(n, h) < 1) throw std::domain_error("module is zero");
  DetFactored f;
  f.delta_h_power = bases::dimension(n, h);
  for (int k = 1; k <= (n + h) / 2; ++k) {
    const long long a = paths::alpha_closed(n, h, k);
    if (a > 0) f.ratio_powers.emplace_back(k, a);
  }
  return f;
}

namespace {

// Assembles prod delta(k)^{e_k} for signed exponents into a reduced fraction.
// Full known factors cancel by exact division; any residual common factor is
// removed by a gcd in the loop variable, so the final pair is coprime.
RationalFunc assemble_delta_product(const std::map<int, long long>& exponents) {
  LaurentPoly num(1), den(1);
  for (const auto& [k, e] : exponents) {
    if (k == 0 || e == 0) continue;  // delta(0) = 1
    const LaurentPoly p = alg::delta(k).pow(static_cast<unsigned long>(e > 0 ? e : -e));
    if (e > 0)
      num *= p;
    else
      den *= p;
  }
  if (den.is_one()) return RationalFunc(std::move(num));
  LaurentPoly g = LaurentPoly::gcd(num, den);
  if (!g.is_one()) {
    num = LaurentPoly::divide_exact(num, g);
    den = LaurentPoly::divide_exact(den, g);
  }
  return RationalFunc::from_coprime(std::move(num), std::move(den));
}

}  // namespace

RationalFunc det_closed(int n, int h) {
  const DetFactored f = det_closed_factored(n, h);
  std::map<int, long long> e;
  e[h] += f.delta_h_power;
  for (const auto& [k, a] : f.ratio_powers) {
    e[k] += a;
    e[k - 1] -= a;
  }
  return assemble_delta_product(e);
}

RationalFunc det_s_closed(int n, int h) {
  const DetFactored f = det_closed_factored(n, h);
  std::map<int, long long> e;
  // (delta(1)^h / delta(h))^dim * det_closed: the delta(h)^dim prefactor
  // cancels, leaving delta(1)^{h*dim} in front of the ratio product.
  e[1] += static_cast<long long>(h) * f.delta_h_power;
  for (const auto& [k, a] : f.ratio_powers) {
    e[k] += a;
    e[k - 1] -= a;
  }
  return assemble_delta_product(e);
}

// --- semi-meander matrices ---------------------------------------------------

DeltaPoly meander_pair(const PlanarMatching& a, const PlanarMatching& b,
                       bool restricted) {
  const tl::GlueCycles g = tl::glue_cycles(a, b);
  if (restricted && !g.tops_distinct) return DeltaPoly{};
  return DeltaPoly::monomial(Int(1), g.cycles);
}

MeanderMatrix meander_matrix(int n, int h, MeanderKind kind, Exec ex) {
  MeanderMatrix out;
  out.n = n;
  out.h = h;
  out.kind = kind;
  out.labels = labels_or_throw(n, h);
  const int dim = out.dim();
  std::vector<PlanarMatching> ms;
  ms.reserve(dim);
  for (const StepTuple& t : out.labels) ms.push_back(bases::tuple_to_matching(t));
  const bool restricted = kind == MeanderKind::S;
  out.entries.assign(dim, std::vector<DeltaPoly>(dim));
  if (ex == Exec::parallel) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        out.entries[i][j] = meander_pair(ms[i], ms[j], restricted);
  } else {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j)
        out.entries[i][j] = meander_pair(ms[i], ms[j], restricted);
  }
  return out;
}

// --- exact determinants ------------------------------------------------------

namespace {

PolyZ delta_to_dense(const alg::DeltaPoly& p) {
  PolyZ d;
  if (p.is_zero()) return d;
  d.assign(p.degree() + 1, Int(0));
  for (const auto& [e, c] : p.terms()) d[e] = c;
  return d;
}

DeltaPoly dense_to_delta(const PolyZ& p) {
  DeltaPoly r;
  for (int e = 0; e < static_cast<int>(p.size()); ++e)
    if (p[e] != 0) r = r + DeltaPoly::monomial(p[e], e);
  return r;
}

LaurentPoly dense_to_laurent(const PolyZ& p, int shift) {
  std::vector<LaurentPoly::Term> terms;
  for (int e = 0; e < static_cast<int>(p.size()); ++e)
    if (p[e] != 0) terms.emplace_back(e + shift, p[e]);
  return LaurentPoly::from_terms(std::move(terms));
}

PolyZ laurent_to_dense(const LaurentPoly& p, int shift) {
  PolyZ d;
  if (p.is_zero()) return d;
  d.assign(p.max_exp() + shift + 1, Int(0));
  for (const auto& [e, c] : p.terms()) d[e + shift] = c;
  return d;
}

// gcd over one polynomial variable, reusing the Laurent machinery.
PolyZ dense_gcd(const PolyZ& a, const PolyZ& b) {
  return laurent_to_dense(
      LaurentPoly::gcd(dense_to_laurent(a, 0), dense_to_laurent(b, 0)), 0);
}

struct ClearedMatrix {
  std::vector<std::vector<LaurentPoly>> num;  // row-scaled entries
  std::vector<LaurentPoly> row_den;           // lcm of the row denominators
};

ClearedMatrix clear_rows(const std::vector<std::vector<RationalFunc>>& m) {
  const int dim = static_cast<int>(m.size());
  ClearedMatrix out;
  out.num.assign(dim, {});
  out.row_den.assign(dim, LaurentPoly(1));
  for (int i = 0; i < dim; ++i) {
    LaurentPoly l(1);
    for (const auto& e : m[i]) {
      if (e.den().is_one()) continue;
      const LaurentPoly g = LaurentPoly::gcd(l, e.den());
      l = e.den() * LaurentPoly::divide_exact(l, g);
    }
    // Prefer the centered unit multiple so symmetric entries stay symmetric
    // after scaling.
    if (auto c = alg::centered_symmetric_even(l)) l = *c;
    out.row_den[i] = l;
    out.num[i].reserve(dim);
    for (const auto& e : m[i])
      out.num[i].push_back(e.num() * LaurentPoly::divide_exact(l, e.den()));
  }
  return out;
}

// Divides num by every factor, exactly where possible; residual factors are
// collected and the leftover common part is removed by one gcd. Returns the
// coprime (num, den) pair.
std::pair<PolyZ, PolyZ> cancel_factors(PolyZ num, std::vector<PolyZ> factors) {
  PolyZ den{Int(1)};
  for (PolyZ& f : factors) {
    if (f.size() == 1) {  // constant factor: fold into the content pass below
      den = detkernel::poly_mul(den, f);
      continue;
    }
    bool divided = false;
    if (!num.empty()) {
      try {
        num = detkernel::poly_divide_exact(num, f);
        divided = true;
      } catch (const std::domain_error&) {
      }
    }
    if (!divided) den = detkernel::poly_mul(den, f);
  }
  if (den.size() > 1 && !num.empty()) {
    PolyZ g = dense_gcd(num, den);
    if (g.size() > 1 || (g.size() == 1 && g[0] != 1)) {
      num = detkernel::poly_divide_exact(num, g);
      den = detkernel::poly_divide_exact(den, g);
    }
  }
  // Coprime integer contents.
  Int cn(0), cd(0);
  for (const Int& c : num) mpz_gcd(cn.get_mpz_t(), cn.get_mpz_t(), c.get_mpz_t());
  for (const Int& c : den) mpz_gcd(cd.get_mpz_t(), cd.get_mpz_t(), c.get_mpz_t());
  Int g;
  mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
  if (g > 1) {
    for (Int& c : num) c /= g;
    for (Int& c : den) c /= g;
  }
  return {std::move(num), std::move(den)};
}

}  // namespace

RationalFunc det_fraction_free(const GramMatrix& m, Exec ex) {
  const int dim = m.dim();
  if (dim == 0) throw std::domain_error("det: empty matrix");
  ClearedMatrix cleared = clear_rows(m.entries);

  // Loop-variable route: every cleared entry of a bilinear-form matrix is
  // symmetric with even exponents, so the whole elimination can run in the
  // one-variable polynomial ring.
  bool delta_ok = true;
  std::vector<std::vector<PolyZ>> dmat(dim, std::vector<PolyZ>(dim));
  for (int i = 0; i < dim && delta_ok; ++i)
    for (int j = 0; j < dim; ++j) {
      auto d = alg::to_delta_poly(cleared.num[i][j]);
      if (!d) {
        delta_ok = false;
        break;
      }
      dmat[i][j] = delta_to_dense(*d);
    }
  if (delta_ok) {
    std::vector<PolyZ> dens;
    dens.reserve(dim);
    bool dens_ok = true;
    for (const LaurentPoly& rd : cleared.row_den) {
      auto d = alg::to_delta_poly(rd);
      if (!d) {
        dens_ok = false;
        break;
      }
      dens.push_back(delta_to_dense(*d));
    }
    if (dens_ok) {
      PolyZ det = detkernel::det_poly(dmat, ex);
      auto [num_d, den_d] = cancel_factors(std::move(det), std::move(dens));
      return RationalFunc::from_coprime(
          dense_to_delta(num_d).substitute_loop_weight(),
          dense_to_delta(den_d).substitute_loop_weight());
    }
  }

  // General route: shift each row to an ordinary polynomial in A and
  // compensate the unit at the end.
  int unit_shift = 0;
  std::vector<std::vector<PolyZ>> amat(dim, std::vector<PolyZ>(dim));
  for (int i = 0; i < dim; ++i) {
    int lo = 0;
    bool any = false;
    for (int j = 0; j < dim; ++j)
      if (!cleared.num[i][j].is_zero()) {
        lo = any ? std::min(lo, cleared.num[i][j].min_exp())
                 : cleared.num[i][j].min_exp();
        any = true;
      }
    if (!any) return RationalFunc::zero();
    unit_shift += lo;
    for (int j = 0; j < dim; ++j)
      amat[i][j] = laurent_to_dense(cleared.num[i][j], -lo);
  }
  const PolyZ det = detkernel::det_poly(amat, ex);
  LaurentPoly num = dense_to_laurent(det, unit_shift);
  LaurentPoly den(1);
  for (const LaurentPoly& rd : cleared.row_den) den *= rd;
  return RationalFunc(std::move(num), std::move(den));
}

DeltaPoly det_fraction_free(const MeanderMatrix& m, Exec ex) {
  const int dim = m.dim();
  if (dim == 0) throw std::domain_error("det: empty matrix");
  std::vector<std::vector<PolyZ>> dmat(dim, std::vector<PolyZ>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) dmat[i][j] = delta_to_dense(m.entries[i][j]);
  return dense_to_delta(detkernel::det_poly(dmat, ex));
}

// --- exact numeric tier ------------------------------------------------------

namespace {

std::vector<mpq_class> delta_values_at(int up_to, const mpq_class& a) {
  // delta(-1) omitted; values[k] = delta(k) at A = a, by the recurrence.
  std::vector<mpq_class> v(up_to + 1);
  const mpq_class w = LaurentPoly::loop_weight().eval(a);
  mpq_class prev(0);
  v[0] = 1;
  for (int k = 1; k <= up_to; ++k) {
    v[k] = w * v[k - 1] - prev;
    v[k].canonicalize();
    prev = v[k - 1];
  }
  return v;
}

}  // namespace

mpq_class det_b_matrix_at(int n, int h, const mpq_class& a_value, Exec ex) {
  const std::vector<StepTuple> labels = labels_or_throw(n, h);
  const int dim = static_cast<int>(labels.size());
  std::vector<PlanarMatching> ms;
  ms.reserve(dim);
  for (const StepTuple& t : labels) ms.push_back(bases::tuple_to_matching(t));

  // Idempotent diagrams with their coefficients evaluated at the point.
  std::vector<PlanarMatching> mid_diagrams;
  std::vector<mpq_class> mid_coeffs;
  for (const auto& [d, c] : jw_or_identity(h).combo()) {
    mid_diagrams.push_back(d);
    mid_coeffs.push_back(c.eval(a_value));
  }
  const int nmid = static_cast<int>(mid_diagrams.size());

  // Left composites: matching s with one idempotent diagram stacked on top.
  std::vector<std::vector<PlanarMatching>> comp(dim);
  std::vector<std::vector<int>> comp_loops(dim);
  for (int s = 0; s < dim; ++s)
    for (int d = 0; d < nmid; ++d) {
      auto [mm, loops] = tl::compose_matchings(ms[s], mid_diagrams[d]);
      comp[s].push_back(std::move(mm));
      comp_loops[s].push_back(loops);
    }

  const mpq_class w = LaurentPoly::loop_weight().eval(a_value);
  std::vector<mpq_class> wpow(n + h + 2);
  wpow[0] = 1;
  for (std::size_t i = 1; i < wpow.size(); ++i) wpow[i] = wpow[i - 1] * w;

  std::vector<std::vector<mpq_class>> mat(dim, std::vector<mpq_class>(dim));
  auto fill_entry = [&](int s, int t) {
    mpq_class acc(0);
    for (int d = 0; d < nmid; ++d) {
      const int cycles =
          tl::glue_cycles(comp[s][d], ms[t]).cycles + comp_loops[s][d];
      acc += mid_coeffs[d] * wpow[cycles];
    }
    acc.canonicalize();
    mat[s][t] = std::move(acc);
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for collapse(2) schedule(static)
    for (int s = 0; s < dim; ++s)
      for (int t = 0; t < dim; ++t) fill_entry(s, t);
  } else {
    for (int s = 0; s < dim; ++s)
      for (int t = 0; t < dim; ++t) fill_entry(s, t);
  }

  // Clear one common denominator and run the exact integer determinant.
  Int l(1);
  for (const auto& row : mat)
    for (const auto& e : row)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
  std::vector<std::vector<Int>> imat(dim, std::vector<Int>(dim));
  for (int s = 0; s < dim; ++s)
    for (int t = 0; t < dim; ++t) {
      Int scale;
      mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), mat[s][t].get_den_mpz_t());
      imat[s][t] = mpz_class(mat[s][t].get_num()) * scale;
    }
  mat.clear();
  const Int det = detkernel::det_integer(imat, ex);

  Int lpow;
  mpz_pow_ui(lpow.get_mpz_t(), l.get_mpz_t(), static_cast<unsigned long>(dim));
  mpq_class out(det, lpow);
  out.canonicalize();
  return out;
}

mpq_class d_diagonal_product_at(int n, int h, const mpq_class& a_value) {
  const std::vector<StepTuple> labels = labels_or_throw(n, h);
  const std::vector<mpq_class> dv = delta_values_at((n + h) / 2 + 1, a_value);
  mpq_class out(1);
  for (const StepTuple& t : labels) {
    mpq_class term = dv[t.h];
    for (int i = 0; i + 1 < t.n; ++i)
      if (t.a[i + 1] == t.a[i] - 1) term *= dv[t.a[i]] / dv[t.a[i + 1]];
    out *= term;
  }
  out.canonicalize();
  return out;
}

mpq_class det_closed_at(int n, int h, const mpq_class& a_value) {
  const DetFactored f = det_closed_factored(n, h);
  const std::vector<mpq_class> dv = delta_values_at((n + h) / 2 + 1, a_value);
  auto qpow = [](const mpq_class& b, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), e);
    r.canonicalize();
    return r;
  };
  mpq_class out = qpow(dv[h], static_cast<unsigned long>(f.delta_h_power));
  for (const auto& [k, a] : f.ratio_powers)
    out *= qpow(dv[k] / dv[k - 1], static_cast<unsigned long>(a));
  out.canonicalize();
  return out;
}

}  // namespace skein::gram
