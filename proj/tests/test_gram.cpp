#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "skein/bases.hpp"
#include "skein/detkernel.hpp"
#include "skein/gram.hpp"
#include "skein/quantum.hpp"

using skein::Exec;
using skein::alg::DeltaPoly;
using skein::alg::Int;
using skein::alg::LaurentPoly;
using skein::alg::RationalFunc;
using skein::bases::StepTuple;
using namespace skein::gram;

namespace {

StepTuple t_of(std::vector<int> a) {
  const int n = static_cast<int>(a.size());
  const int h = a.back();
  return StepTuple(n, h, std::move(a));
}

RationalFunc loop() { return RationalFunc(LaurentPoly::loop_weight()); }
RationalFunc dq(int n) { return RationalFunc(skein::alg::delta(n)); }

// Independent oracle: cofactor expansion along the first row.
RationalFunc det_cofactor(const std::vector<std::vector<RationalFunc>>& m) {
  const int n = static_cast<int>(m.size());
  if (n == 1) return m[0][0];
  RationalFunc acc;
  for (int j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<RationalFunc>> minor(n - 1);
    for (int i = 1; i < n; ++i)
      for (int jj = 0; jj < n; ++jj)
        if (jj != j) minor[i - 1].push_back(m[i][jj]);
    const RationalFunc term = m[0][j] * det_cofactor(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

GramMatrix wrap(std::vector<std::vector<RationalFunc>> entries) {
  GramMatrix g;
  g.n = 1;
  g.h = 1;
  g.labels.assign(entries.size(), t_of({1}));
  g.entries = std::move(entries);
  return g;
}

}  // namespace

TEST_CASE("pairings of small basis elements") {
  using skein::bases::b_element;
  CHECK(gram_pair(b_element(t_of({1, 0})), b_element(t_of({1, 0}))) == loop());
  CHECK(gram_pair(b_element(t_of({1, 2, 1})), b_element(t_of({1, 0, 1}))) ==
        loop());
  CHECK(gram_pair(b_element(t_of({1, 2})), b_element(t_of({1, 2}))) == dq(2));
  CHECK_THROWS_AS(gram_pair(b_element(t_of({1, 0})), b_element(t_of({1, 2}))),
                  std::domain_error);
}

TEST_CASE("gram matrices in both bases for three strands") {
  const GramMatrix b = gram_matrix(3, 1, Basis::B);
  REQUIRE(b.dim() == 2);
  CHECK(b.entries[0][0] == loop() * loop());
  CHECK(b.entries[0][1] == loop());
  CHECK(b.entries[1][0] == loop());
  CHECK(b.entries[1][1] == loop() * loop());

  const GramMatrix d = gram_matrix(3, 1, Basis::D);
  CHECK(d.entries[0][0] == dq(2));
  CHECK(d.entries[0][1].is_zero());
  CHECK(d.entries[1][0].is_zero());
  CHECK(d.entries[1][1] == loop() * loop());

  const GramMatrix b22 = gram_matrix(2, 2, Basis::B);
  REQUIRE(b22.dim() == 1);
  CHECK(b22.entries[0][0] == dq(2));

  CHECK_THROWS_AS(gram_matrix(3, 0, Basis::B), std::domain_error);
  CHECK_THROWS_AS(gram_matrix(2, 4, Basis::B), std::domain_error);
}

TEST_CASE("entries stay symmetric under inverting the variable") {
  const GramMatrix b = gram_matrix(5, 1, Basis::B);
  for (const auto& row : b.entries)
    for (const auto& e : row) {
      CHECK(e.num().invert_variable() * e.den() == e.den().invert_variable() * e.num());
    }
}

TEST_CASE("closed diagonal norms") {
  CHECK(d_diagonal_closed(t_of({1, 0})) == loop());
  CHECK(d_diagonal_closed(t_of({1, 2, 1})) == dq(2));
  for (int h = 1; h <= 4; ++h) {
    std::vector<int> a(h);
    for (int i = 0; i < h; ++i) a[i] = i + 1;
    CHECK(d_diagonal_closed(StepTuple(h, h, a)) == dq(h));
  }
  // Norms agree with the honest pairing.
  for (int n = 1; n <= 6; ++n)
    for (int h = n % 2; h <= std::min(n, 4); h += 2)
      for (const StepTuple& t : skein::bases::enumerate_tuples(n, h)) {
        const auto d = skein::bases::d_element(t);
        CHECK(gram_pair(d, d) == d_diagonal_closed(t));
      }
}

TEST_CASE("transform matrix on the smallest cases") {
  const GramMatrix a31 = transform_matrix(3, 1);
  REQUIRE(a31.dim() == 2);
  CHECK(a31.entries[0][0].is_one());
  CHECK(a31.entries[0][1] == RationalFunc::one() / loop());
  CHECK(a31.entries[1][0].is_zero());
  CHECK(a31.entries[1][1].is_one());

  CHECK(transform_matrix(2, 0).entries[0][0].is_one());
  CHECK(transform_matrix(4, 4).entries[0][0].is_one());
}

TEST_CASE("fraction-free determinants on explicit matrices") {
  const RationalFunc d2 = loop() * loop();
  const GramMatrix m = wrap({{d2, loop()}, {loop(), d2}});
  const RationalFunc expect = d2 * d2 - d2;  // delta^4 - delta^2
  CHECK(det_fraction_free(m) == expect);

  const GramMatrix eye = wrap({{RationalFunc::one(), RationalFunc::zero()},
                               {RationalFunc::zero(), RationalFunc::one()}});
  CHECK(det_fraction_free(eye).is_one());

  const GramMatrix diag = wrap({{dq(2), RationalFunc::zero()},
                                {RationalFunc::zero(), d2}});
  CHECK(det_fraction_free(diag) == dq(2) * d2);

  // Singular matrix.
  const GramMatrix sing = wrap({{loop(), loop()}, {loop(), loop()}});
  CHECK(det_fraction_free(sing).is_zero());
}

TEST_CASE("elimination agrees with cofactor expansion on random matrices") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(-3, 3);
  std::uniform_int_distribution<int> nden(0, 3);
  auto rand_rf = [&] {
    LaurentPoly n = LaurentPoly::monomial(Int(coeff(rng)), exp(rng)) +
                    LaurentPoly::monomial(Int(coeff(rng)), exp(rng));
    if (nden(rng) == 0) {
      return RationalFunc(n, skein::alg::delta(1 + (exp(rng) & 1)));
    }
    return RationalFunc(n);
  };
  for (int trial = 0; trial < 40; ++trial) {
    const int dim = 1 + trial % 4;
    std::vector<std::vector<RationalFunc>> m(dim, std::vector<RationalFunc>(dim));
    for (auto& row : m)
      for (auto& e : row) e = rand_rf();
    const GramMatrix g = wrap(m);
    CHECK(det_fraction_free(g) == det_cofactor(m));
  }
}

TEST_CASE("direct elimination and interpolation kernels agree") {
  using skein::detkernel::PolyZ;
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 2 + trial % 5;
    std::vector<std::vector<PolyZ>> m(dim, std::vector<PolyZ>(dim));
    for (auto& row : m)
      for (auto& e : row) {
        PolyZ p(deg(rng) + 1);
        for (auto& c : p) c = Int(coeff(rng));
        e = skein::detkernel::poly_normalize(std::move(p));
      }
    const PolyZ a = skein::detkernel::det_poly_bareiss(m);
    const PolyZ b = skein::detkernel::det_poly_interp(m, Exec::serial);
    const PolyZ c = skein::detkernel::det_poly_interp(m, Exec::parallel);
    CHECK(a == b);
    CHECK(a == c);
  }
}

TEST_CASE("integer kernels agree across routes") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<long> big(-1000000, 1000000);
  for (int dim : {3, 8, 20, 45}) {
    std::vector<std::vector<Int>> m(dim, std::vector<Int>(dim));
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j <= i; ++j) {
        m[i][j] = Int(big(rng));
        m[j][i] = m[i][j];  // exercise the symmetric elimination
      }
    const Int a = skein::detkernel::det_integer_bareiss(m);
    const Int b = skein::detkernel::det_integer_multimodular(m, Exec::parallel);
    const Int c = skein::detkernel::det_integer_multimodular(m, Exec::serial);
    CHECK(a == b);
    CHECK(a == c);
  }
  // Non-symmetric and singular inputs.
  std::vector<std::vector<Int>> s{{Int(1), Int(2), Int(3)},
                                  {Int(2), Int(4), Int(6)},
                                  {Int(5), Int(1), Int(0)}};
  CHECK(skein::detkernel::det_integer_multimodular(s, Exec::serial) == Int(0));
}

TEST_CASE("closed determinant formula on small modules") {
  CHECK(det_closed(2, 0) == loop());
  CHECK(det_closed(3, 1) == loop() * loop() * dq(2));
  for (int h = 1; h <= 5; ++h) CHECK(det_closed(h, h) == dq(h));

  const DetFactored f = det_closed_factored(3, 1);
  CHECK(f.delta_h_power == 2);
  REQUIRE(f.ratio_powers.size() == 2);
  CHECK(f.ratio_powers[0] == std::pair<int, long long>{1, 1});
  CHECK(f.ratio_powers[1] == std::pair<int, long long>{2, 1});

  for (int n = 1; n <= 7; ++n)
    for (int h = n % 2; h <= std::min(n, 4); h += 2) {
      const RationalFunc closed = det_closed(n, h);
      CHECK(det_fraction_free(gram_matrix(n, h, Basis::B)) == closed);
      CHECK(det_fraction_free(gram_matrix(n, h, Basis::D)) == closed);
    }
}

TEST_CASE("meander pairings and matrices") {
  using skein::bases::tuple_to_matching;
  const auto cup = tuple_to_matching(t_of({1, 0}));
  CHECK(meander_pair(cup, cup, false) == DeltaPoly::monomial(Int(1), 1));
  CHECK(meander_pair(cup, cup, true) == DeltaPoly::monomial(Int(1), 1));

  const auto id2 = tuple_to_matching(t_of({1, 2}));
  CHECK(meander_pair(id2, id2, true) == DeltaPoly::monomial(Int(1), 2));

  const auto m121 = tuple_to_matching(t_of({1, 2, 1}));
  const auto m101 = tuple_to_matching(t_of({1, 0, 1}));
  CHECK(meander_pair(m121, m101, true) == DeltaPoly::monomial(Int(1), 1));

  const MeanderMatrix s31 = meander_matrix(3, 1, MeanderKind::S);
  const DeltaPoly d1 = DeltaPoly::monomial(Int(1), 1);
  const DeltaPoly d2 = DeltaPoly::monomial(Int(1), 2);
  CHECK(s31.entries[0][0] == d2);
  CHECK(s31.entries[0][1] == d1);
  CHECK(s31.entries[1][0] == d1);
  CHECK(s31.entries[1][1] == d2);
  CHECK(meander_matrix(3, 1, MeanderKind::T).entries == s31.entries);

  // Restriction bites exactly where both through strands fall on one loop.
  const MeanderMatrix s42 = meander_matrix(4, 2, MeanderKind::S);
  const DeltaPoly d3 = DeltaPoly::monomial(Int(1), 3);
  const std::vector<std::vector<DeltaPoly>> expect{
      {d3, d2, DeltaPoly{}}, {d2, d3, d2}, {DeltaPoly{}, d2, d3}};
  CHECK(s42.entries == expect);
  const MeanderMatrix t42 = meander_matrix(4, 2, MeanderKind::T);
  CHECK(t42.entries[0][2] == d1);
  CHECK(t42.entries[2][0] == d1);
}

TEST_CASE("semi-meander determinant identity on small modules") {
  CHECK(det_s_closed(2, 0) == loop());
  CHECK(det_s_closed(3, 1) == det_closed(3, 1));
  CHECK(det_s_closed(2, 2) == loop() * loop());

  for (int n = 1; n <= 6; ++n)
    for (int h = n % 2; h <= std::min(n, 3); h += 2) {
      const DeltaPoly det =
          det_fraction_free(meander_matrix(n, h, MeanderKind::S));
      CHECK(RationalFunc(det.substitute_loop_weight()) == det_s_closed(n, h));
    }
}

TEST_CASE("natural pairings match restricted meander values through one color") {
  // With at most one through strand the idempotent is invisible, so the
  // bilinear form equals the restricted meander pairing on bare matchings.
  using skein::bases::b_element;
  using skein::bases::enumerate_tuples;
  using skein::bases::tuple_to_matching;
  for (int n = 1; n <= 6; ++n)
    for (int h = n % 2; h <= std::min(n, 1); h += 2)
      for (const auto& s : enumerate_tuples(n, h))
        for (const auto& t : enumerate_tuples(n, h)) {
          const RationalFunc g = gram_pair(b_element(s), b_element(t));
          const DeltaPoly l =
              meander_pair(tuple_to_matching(s), tuple_to_matching(t), true);
          CHECK(g == RationalFunc(l.substitute_loop_weight()));
        }
}

TEST_CASE("parallel assembly matches serial") {
  const GramMatrix a = gram_matrix(6, 2, Basis::B, Exec::serial);
  const GramMatrix b = gram_matrix(6, 2, Basis::B, Exec::parallel);
  CHECK(a.entries == b.entries);
  const GramMatrix ta = transform_matrix(5, 1, Exec::serial);
  const GramMatrix tb = transform_matrix(5, 1, Exec::parallel);
  CHECK(ta.entries == tb.entries);
}

TEST_CASE("numeric tier agrees with the symbolic pipeline on small modules") {
  const mpq_class point(3, 2);
  for (int n = 1; n <= 7; ++n)
    for (int h = n % 2; h <= std::min(n, 2); h += 2) {
      const RationalFunc symbolic = det_fraction_free(gram_matrix(n, h, Basis::B));
      const mpq_class numeric = det_b_matrix_at(n, h, point, Exec::parallel);
      CHECK(numeric == symbolic.eval(point));
      CHECK(det_closed_at(n, h, point) == det_closed(n, h).eval(point));
      CHECK(d_diagonal_product_at(n, h, point) == numeric);
    }
}
