#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "skein/genfun.hpp"
#include "skein/paths.hpp"

using skein::alg::Int;
using namespace skein::gf;

namespace {

QPoly q_mono(long c, int e) { return QPoly::monomial(Int(c), e); }

// Exhaustive statistic histogram: q-polynomial counting paths to (n, h) by
// their number of k-down steps. The independent oracle for every series.
QPoly histogram(int n, int h, int k) {
  QPoly out;
  for (const auto& p : skein::paths::enumerate_paths(n, h))
    out = out + q_mono(1, static_cast<int>(skein::paths::down_steps(p, k).size()));
  return out;
}

}  // namespace

TEST_CASE("chebyshev recurrence") {
  CHECK(chebyshev_u(-1).is_zero());
  CHECK(chebyshev_u(0) == IntPoly(std::vector<Int>{Int(1)}));
  CHECK(chebyshev_u(1) == IntPoly(std::vector<Int>{Int(0), Int(2)}));
  CHECK(chebyshev_u(2) == IntPoly(std::vector<Int>{Int(-1), Int(0), Int(4)}));
  CHECK_THROWS_AS(chebyshev_u(-2), std::domain_error);
  for (int m = 2; m <= 12; ++m) {
    const IntPoly two_t(std::vector<Int>{Int(0), Int(2)});
    CHECK(chebyshev_u(m) == two_t * chebyshev_u(m - 1) - chebyshev_u(m - 2));
  }
}

TEST_CASE("catalan series solves its fixed point") {
  const TruncSeries c = catalan_series(20);
  CHECK(c.coeff(0) == QPoly(1));
  CHECK(c.coeff(3).is_zero());
  CHECK(c.coeff(4) == QPoly(2));
  CHECK(c.coeff(12) == QPoly(132));
  const TruncSeries rhs = TruncSeries::one(20) + (c * c).shifted(2);
  CHECK(c == rhs);
  for (int n = 0; n <= 20; n += 2)
    CHECK(c.coeff(n).eval_at_one() ==
          Int(static_cast<long>(skein::paths::count_paths_closed(n, 0))));
}

TEST_CASE("marked series on small coefficients") {
  const TruncSeries c1 = ck_series(1, 8);
  CHECK(c1.coeff(2) == q_mono(1, 1));
  CHECK(c1.coeff(4) == q_mono(1, 1) + q_mono(1, 2));
  const TruncSeries c2 = ck_series(2, 8);
  CHECK(c2.coeff(2) == QPoly(1));  // the single short path has no 2-down step
  CHECK_THROWS_AS(ck_series(0, 4), std::domain_error);
}

TEST_CASE("closed chebyshev quotient agrees with the fixed points") {
  for (int k = 1; k <= 6; ++k) {
    const TruncSeries direct = ck_series(k, 20);
    CHECK(direct == ck_closed_series(k, 20));
    CHECK(direct.at_q_one() == catalan_series(20));
  }
}

TEST_CASE("first moment of the marked series") {
  const TruncSeries c = catalan_series(20);
  for (int k = 1; k <= 5; ++k) {
    const std::vector<Int> moment = ck_series(k, 20).dq_at_one();
    const TruncSeries expect = c.pow(2 * k + 1).shifted(2 * k);
    for (int n = 0; n <= 20; ++n)
      CHECK(moment[n] == expect.coeff(n).eval_at_one());
  }
}

TEST_CASE("bivariate series against the path histogram") {
  // The spot value that pins the q in the first product factor.
  CHECK(ckh_series(1, 1, 3).coeff(3) == QPoly(1) + q_mono(1, 1));
  CHECK(histogram(3, 1, 1) == QPoly(1) + q_mono(1, 1));
  CHECK(ckh_series(2, 1, 3).coeff(3) == QPoly(1) + q_mono(1, 1));

  for (int n = 0; n <= 10; ++n)
    for (int h = n % 2; h <= n; h += 2)
      for (int k = 1; k <= (n + h) / 2 + 1; ++k) {
        const TruncSeries s = ckh_series(k, h, n);
        CHECK(s.coeff(n) == histogram(n, h, k));
      }
}

TEST_CASE("closed product and recurrence routes agree") {
  for (int k = 0; k <= 4; ++k)
    for (int h = 0; h <= 4; ++h)
      CHECK(ckh_series(k, h, 10) == ckh_series_recurrence(k, h, 10));
}

TEST_CASE("collapse at q = 1 counts all paths") {
  for (int k = 1; k <= 4; ++k)
    for (int h = 0; h <= 3; ++h) {
      const TruncSeries s = ckh_series(k, h, 12);
      for (int n = 0; n <= 12; ++n)
        CHECK(s.coeff(n).eval_at_one() ==
              Int(static_cast<long>(skein::paths::count_paths_closed(n, h))));
    }
}

TEST_CASE("series route to the step count") {
  CHECK(down_step_count_gf(4, 0, 1) == Int(3));
  CHECK(down_step_count_gf(3, 1, 2) == Int(1));
  CHECK(down_step_count_gf(6, 6, 3) == Int(0));
  for (int n = 0; n <= 10; ++n)
    for (int h = n % 2; h <= n; h += 2)
      for (int k = 1; k <= (n + h) / 2 + 1; ++k)
        CHECK(down_step_count_gf(n, h, k) ==
              Int(static_cast<long>(skein::paths::alpha_closed(n, h, k))));
}

TEST_CASE("closed count over classic paths") {
  CHECK(corollary_count(2, 1) == Int(3));
  CHECK(corollary_count(2, 2) == Int(1));
  CHECK(corollary_count(3, 5) == Int(0));
  for (int n = 0; n <= 7; ++n)
    for (int k = 1; k <= n + 1; ++k)
      CHECK(corollary_count(n, k) == Int(static_cast<long>(skein::paths::alpha_enumerate(2 * n, 0, k))));
}

TEST_CASE("series inverse requires a unit constant term") {
  TruncSeries s = TruncSeries::one(6);
  s.set_coeff(1, QPoly(3));
  CHECK(s * s.inverse() == TruncSeries::one(6));
  TruncSeries bad = TruncSeries::x_power(6, 1);
  CHECK_THROWS_AS(bad.inverse(), std::domain_error);
}
