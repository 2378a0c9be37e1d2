#include "skein/genfun.hpp"

#include <algorithm>
#include <stdexcept>

namespace skein::gf {

QPoly QPoly::monomial(Int c, int e) {
  QPoly p;
  if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

bool QPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Int QPoly::coeff(int e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Int(0);
}

QPoly operator+(const QPoly& a, const QPoly& b) {
  QPoly r;
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() && j < b.terms_.size()) {
    if (a.terms_[i].first < b.terms_[j].first) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (a.terms_[i].first > b.terms_[j].first) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Int c = a.terms_[i].second + b.terms_[j].second;
      if (c != 0) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
      ++i, ++j;
    }
  }
  for (; i < a.terms_.size(); ++i) r.terms_.push_back(a.terms_[i]);
  for (; j < b.terms_.size(); ++j) r.terms_.push_back(b.terms_[j]);
  return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
  QPoly nb = b;
  for (auto& [e, c] : nb.terms_) c = -c;
  return a + nb;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  std::vector<Int> acc(hi - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  QPoly r;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) r.terms_.emplace_back(e, std::move(acc[e - lo]));
  return r;
}

Int QPoly::eval_at_one() const {
  Int s(0);
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Int QPoly::weighted_sum() const {
  Int s(0);
  for (const auto& [e, c] : terms_) s += Int(e) * c;
  return s;
}

TruncSeries TruncSeries::one(int order) {
  TruncSeries s(order);
  s.c_[0] = QPoly(1);
  return s;
}

TruncSeries TruncSeries::x_power(int order, int k) {
  TruncSeries s(order);
  if (k <= order) s.c_[k] = QPoly(1);
  return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series: order mismatch");
  TruncSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series: order mismatch");
  TruncSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
  return r;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  if (a.order_ != b.order_) throw std::invalid_argument("series: order mismatch");
  TruncSeries r(a.order_);
  for (int i = 0; i <= a.order_; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= a.order_; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TruncSeries TruncSeries::scaled(const QPoly& q) const {
  TruncSeries r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = c_[i] * q;
  return r;
}

TruncSeries TruncSeries::shifted(int k) const {
  TruncSeries r(order_);
  for (int i = 0; i + k <= order_; ++i) r.c_[i + k] = c_[i];
  return r;
}

TruncSeries TruncSeries::inverse() const {
  if (!c_[0].is_one())
    throw std::domain_error("series inverse: constant term must be 1");
  TruncSeries r(order_);
  r.c_[0] = QPoly(1);
  for (int n = 1; n <= order_; ++n) {
    QPoly acc;
    for (int i = 1; i <= n; ++i) {
      if (c_[i].is_zero() || r.c_[n - i].is_zero()) continue;
      acc = acc + c_[i] * r.c_[n - i];
    }
    r.c_[n] = QPoly{} - acc;
  }
  return r;
}

TruncSeries TruncSeries::pow(int e) const {
  TruncSeries r = one(order_);
  TruncSeries base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

TruncSeries TruncSeries::at_q_one() const {
  TruncSeries r(order_);
  for (int i = 0; i <= order_; ++i) r.c_[i] = QPoly(c_[i].eval_at_one());
  return r;
}

std::vector<Int> TruncSeries::dq_at_one() const {
  std::vector<Int> r(order_ + 1);
  for (int i = 0; i <= order_; ++i) r[i] = c_[i].weighted_sum();
  return r;
}

IntPoly::IntPoly(std::vector<Int> c) : c_(std::move(c)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Int IntPoly::coeff(int e) const {
  if (e < 0 || e >= static_cast<int>(c_.size())) return Int(0);
  return c_[e];
}

mpq_class IntPoly::eval(const mpq_class& t) const {
  mpq_class acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + mpq_class(*it);
  acc.canonicalize();
  return acc;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] = a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return IntPoly{};
  std::vector<Int> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      mpz_addmul(c[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly chebyshev_u(int m) {
  if (m < -1) throw std::domain_error("chebyshev_u: m < -1");
  if (m == -1) return IntPoly{};
  IntPoly prev;                          // U_{-1}
  IntPoly cur(std::vector<Int>{Int(1)}); // U_0
  const IntPoly two_t(std::vector<Int>{Int(0), Int(2)});
  for (int i = 0; i < m; ++i) {
    IntPoly next = two_t * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

TruncSeries catalan_series(int order) {
  TruncSeries c = TruncSeries::one(order);
  const TruncSeries one = TruncSeries::one(order);
  // The fixed point gains two orders of accuracy per pass.
  for (int it = 0; it <= order / 2 + 1; ++it) c = one + (c * c).shifted(2);
  return c;
}

namespace {

// Chain C_1 .. C_k of the marked first-return fixed points; position 0 holds
// the plain Catalan series.
std::vector<TruncSeries> ck_chain(int k, int order) {
  std::vector<TruncSeries> chain;
  chain.reserve(k + 1);
  chain.push_back(catalan_series(order));
  const QPoly q = QPoly::monomial(Int(1), 1);
  const TruncSeries one = TruncSeries::one(order);
  for (int j = 1; j <= k; ++j) {
    // factor = x^2 q C for j = 1 (the first return closes a marked 1-down
    // step), x^2 C_{j-1} afterwards.
    TruncSeries factor = (j == 1 ? chain[0].scaled(q) : chain[j - 1]).shifted(2);
    TruncSeries cur = one;
    for (int it = 0; it <= order / 2 + 1; ++it) cur = one + factor * cur;
    chain.push_back(std::move(cur));
  }
  return chain;
}

// 1 - x^2 C_j, with the j = 0 factor carrying the q of the closing 1-down
// step: 1 - q x^2 C. Forced by C_{1,0} = C_1 = 1/(1 - q x^2 C).
TruncSeries product_factor(const std::vector<TruncSeries>& chain, int j,
                           int order) {
  const QPoly q = QPoly::monomial(Int(1), 1);
  TruncSeries t = (j == 0 ? chain[0].scaled(q) : chain[j]).shifted(2);
  return TruncSeries::one(order) - t;
}

}  // namespace

TruncSeries ck_series(int k, int order) {
  if (k < 1) throw std::domain_error("ck_series: k < 1");
  return ck_chain(k, order).back();
}

TruncSeries ck_closed_series(int k, int order) {
  if (k < 1) throw std::domain_error("ck_closed_series: k < 1");
  // T_m := x^m U_m(1/(2x)) is an honest polynomial: T_0 = T_1 = 1 and
  // T_m = T_{m-1} - x^2 T_{m-2}; clearing the powers of x this way leaves a
  // denominator with constant term 1.
  std::vector<TruncSeries> t;
  t.reserve(k + 1);
  t.push_back(TruncSeries::one(order));  // T_0
  if (k >= 1) t.push_back(TruncSeries::one(order));  // T_1
  for (int m = 2; m <= k; ++m) t.push_back(t[m - 1] - t[m - 2].shifted(2));
  const TruncSeries c = catalan_series(order);
  const QPoly q = QPoly::monomial(Int(1), 1);
  const TruncSeries t_km2 =
      k >= 2 ? t[k - 2] : TruncSeries(order);  // T_{-1} = 0
  TruncSeries num = t[k - 1] - (t_km2 * c).scaled(q).shifted(2);
  TruncSeries den = t[k] - (t[k - 1] * c).scaled(q).shifted(2);
  return num * den.inverse();
}

TruncSeries ckh_series(int k, int h, int order) {
  if (k < 0 || h < 0) throw std::domain_error("ckh_series: negative parameters");
  const std::vector<TruncSeries> chain = ck_chain(std::max(k - 1, 0), order);
  TruncSeries r = TruncSeries::x_power(order, h);  // zero series when h > order
  if (k > h) {
    for (int j = k - 1 - h; j <= k - 1; ++j)
      r = r * product_factor(chain, j, order).inverse();
  } else {
    r = r * chain[0].pow(h - k + 1);
    for (int j = 0; j <= k - 1; ++j)
      r = r * product_factor(chain, j, order).inverse();
  }
  return r;
}

TruncSeries ckh_series_recurrence(int k, int h, int order) {
  if (k < 0 || h < 0) throw std::domain_error("ckh_series: negative parameters");
  const std::vector<TruncSeries> chain = ck_chain(std::max(k - 1, 0), order);
  const TruncSeries& c = chain[0];
  const QPoly q = QPoly::monomial(Int(1), 1);
  const TruncSeries one = TruncSeries::one(order);

  // Solves S = base + factor * S by iteration.
  auto solve = [&](const TruncSeries& base, const TruncSeries& factor) {
    TruncSeries s = base;
    for (int it = 0; it <= order / 2 + 1; ++it) s = base + factor * s;
    return s;
  };
  // First-return factor of the marked statistic: the closing step of a Dyck
  // excursion one level down is a 1-down step exactly when j = 1.
  auto factor = [&](int j) {
    return (j == 1 ? c.scaled(q) : chain[j - 1]).shifted(2);
  };

  // Walk to (k, h) along the diagonal recurrence from a base on an axis.
  const int j0 = std::max(k - h, 0);
  TruncSeries col(order);
  if (j0 == 0) {
    col = solve(one, c.shifted(2));  // height 0, no marks below the axis
    for (int hh = 1; hh <= h - k; ++hh) col = solve(col.shifted(1), c.shifted(2));
  } else {
    col = solve(one, factor(j0));
  }
  for (int j = j0 + 1; j <= k; ++j) col = solve(col.shifted(1), factor(j));
  return col;
}

Int down_step_count_gf(int n, int h, int k) {
  if (k < 1) throw std::domain_error("down_step_count_gf: k < 1");
  if (n < 0) return Int(0);
  return ckh_series(k, h, n).coeff(n).weighted_sum();
}

Int corollary_count(int n, int k) {
  if (n < 0 || k < 1) throw std::domain_error("corollary_count: bad parameters");
  Int b;
  if (n + k + 1 > 2 * n + 1) return Int(0);
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(2 * n + 1),
               static_cast<unsigned long>(n + k + 1));
  Int num = Int(2 * k + 1) * b;
  Int q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
              Int(2 * n + 1).get_mpz_t());
  if (r != 0) throw std::logic_error("corollary_count: count is not integral");
  return q;
}

}  // namespace skein::gf
