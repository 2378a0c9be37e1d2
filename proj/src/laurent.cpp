#include "skein/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein::alg {

LaurentPoly LaurentPoly::monomial(Int c, int e) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentPoly p;
  for (auto& [e, c] : terms) {
    if (c == 0) continue;
    if (!p.terms_.empty() && p.terms_.back().first == e) {
      p.terms_.back().second += c;
      if (p.terms_.back().second == 0) p.terms_.pop_back();
    } else {
      p.terms_.emplace_back(e, std::move(c));
    }
  }
  return p;
}

LaurentPoly LaurentPoly::loop_weight() {
  return from_terms({{-2, Int(-1)}, {2, Int(-1)}});
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int LaurentPoly::min_exp() const { return terms_.front().first; }
int LaurentPoly::max_exp() const { return terms_.back().first; }

Int LaurentPoly::coeff(int e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Int(0);
}

const Int& LaurentPoly::lowest_coeff() const { return terms_.front().second; }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
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

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
  return a + (-b);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.min_exp() + b.min_exp();
  const int hi = a.max_exp() + b.max_exp();
  std::vector<Int> acc(hi - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  LaurentPoly r;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) r.terms_.emplace_back(e, std::move(acc[e - lo]));
  return r;
}

LaurentPoly LaurentPoly::scaled(const Int& c) const {
  if (c == 0) return {};
  LaurentPoly r(*this);
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(*this);
  for (auto& [e, v] : r.terms_) e += k;
  return r;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.emplace_back(-it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly r(1);
  LaurentPoly base(*this);
  while (e > 0) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

Int LaurentPoly::content() const {
  Int g(0);
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

bool LaurentPoly::try_divide(const LaurentPoly& num, const LaurentPoly& den,
                             LaurentPoly& quot) {
  if (den.is_zero()) return false;
  quot = LaurentPoly{};
  if (num.is_zero()) return true;
  LaurentPoly rem = num;
  std::vector<LaurentPoly::Term> qterms;
  while (!rem.is_zero()) {
    const int eq = rem.max_exp() - den.max_exp();
    if (eq < num.min_exp() - den.min_exp()) return false;
    Int c, r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(),
                rem.terms_.back().second.get_mpz_t(),
                den.terms_.back().second.get_mpz_t());
    if (r != 0) return false;
    rem -= den.shifted(eq).scaled(c);
    qterms.emplace_back(eq, std::move(c));
  }
  quot = LaurentPoly::from_terms(std::move(qterms));
  return true;
}

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& num,
                                      const LaurentPoly& den) {
  LaurentPoly q;
  if (!try_divide(num, den, q))
    throw std::domain_error("laurent: inexact division");
  return q;
}

namespace {

// Dense ordinary polynomial helpers for the gcd routine; coefficients of
// x^0..x^deg, no trailing zeros.
using Dense = std::vector<Int>;

Dense dense_normalize(Dense p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

Dense to_dense(const LaurentPoly& p) {
  Dense d(p.max_exp() - p.min_exp() + 1);
  const int lo = p.min_exp();
  for (const auto& [e, c] : p.terms()) d[e - lo] = c;
  return d;
}

Int dense_content(const Dense& p) {
  Int g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

Dense dense_primitive(Dense p) {
  p = dense_normalize(std::move(p));
  if (p.empty()) return p;
  Int g = dense_content(p);
  if (p.back() < 0) g = -g;
  if (g != 1)
    for (auto& c : p) c /= g;
  return p;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
Dense dense_prem(Dense a, const Dense& b) {
  const Int& lc = b.back();
  int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  while (da >= db) {
    Int head = a[da];
    if (head != 0) {
      for (int i = 0; i < da; ++i) a[i] *= lc;
      for (int i = 0; i < db; ++i)
        mpz_submul(a[da - db + i].get_mpz_t(), head.get_mpz_t(), b[i].get_mpz_t());
    }
    a[da] = 0;
    while (da >= 0 && a[da] == 0) --da;
    a.resize(da + 1);
  }
  return a;
}

}  // namespace

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  auto finalize = [](Dense g, Int cont) {
    std::vector<Term> t;
    for (int i = 0; i < static_cast<int>(g.size()); ++i)
      if (g[i] != 0) t.emplace_back(i, g[i] * cont);
    LaurentPoly r = from_terms(std::move(t));
    if (r.lowest_coeff() < 0) r = -r;
    return r;
  };
  if (a.is_zero()) return finalize(dense_primitive(to_dense(b)), b.content());
  if (b.is_zero()) return finalize(dense_primitive(to_dense(a)), a.content());

  Int cont;
  mpz_gcd(cont.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
  Dense pa = dense_primitive(to_dense(a));
  Dense pb = dense_primitive(to_dense(b));
  if (pa.size() < pb.size()) std::swap(pa, pb);
  while (!pb.empty()) {
    Dense r = dense_primitive(dense_prem(std::move(pa), pb));
    pa = std::move(pb);
    pb = std::move(r);
  }
  return finalize(std::move(pa), std::move(cont));
}

mpq_class LaurentPoly::eval(const mpq_class& a) const {
  if (is_zero()) return mpq_class(0);
  if (a == 0) {
    if (min_exp() < 0) throw std::domain_error("laurent: evaluation at 0 with negative exponents");
    return mpq_class(coeff(0));
  }
  // Horner over the sparse terms, top down.
  mpq_class acc(terms_.back().second);
  int prev = terms_.back().first;
  for (auto it = terms_.rbegin() + 1; it != terms_.rend(); ++it) {
    mpq_class step(1);
    for (int i = 0; i < prev - it->first; ++i) step *= a;
    acc = acc * step + mpq_class(it->second);
    prev = it->first;
  }
  if (prev != 0) {
    mpq_class base = prev > 0 ? a : mpq_class(1) / a;
    mpq_class p(1);
    for (int i = 0; i < std::abs(prev); ++i) p *= base;
    acc *= p;
  }
  acc.canonicalize();
  return acc;
}

bool LaurentPoly::is_symmetric_even() const {
  for (const auto& [e, c] : terms_) {
    if (e % 2 != 0) return false;
    if (coeff(-e) != c) return false;
  }
  return true;
}

std::string LaurentPoly::text() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    Int abs = neg ? Int(-c) : c;
    if (first) {
      if (neg) os << '-';
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (e == 0) {
      os << abs.get_str();
    } else if (abs == 1) {
      os << "A^" << e;
    } else {
      os << abs.get_str() << "*A^" << e;
    }
  }
  return os.str();
}

}  // namespace skein::alg
