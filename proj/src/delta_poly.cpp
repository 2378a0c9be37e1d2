#include "skein/delta_poly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace skein::alg {

DeltaPoly DeltaPoly::monomial(Int c, int e) {
  DeltaPoly p;
  if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

bool DeltaPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

int DeltaPoly::degree() const { return terms_.back().first; }

Int DeltaPoly::coeff(int e) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), e,
      [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return Int(0);
}

DeltaPoly operator+(const DeltaPoly& a, const DeltaPoly& b) {
  DeltaPoly r;
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

DeltaPoly operator-(const DeltaPoly& a, const DeltaPoly& b) { return a + (-b); }

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.degree() + b.degree();
  std::vector<Int> acc(hi - lo + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      mpz_addmul(acc[ea + eb - lo].get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  DeltaPoly r;
  for (int e = lo; e <= hi; ++e)
    if (acc[e - lo] != 0) r.terms_.emplace_back(e, std::move(acc[e - lo]));
  return r;
}

LaurentPoly DeltaPoly::substitute_loop_weight() const {
  if (is_zero()) return {};
  const LaurentPoly w = LaurentPoly::loop_weight();
  // Horner over the sparse terms, top down.
  LaurentPoly acc = LaurentPoly(terms_.back().second);
  int prev = terms_.back().first;
  for (auto it = terms_.rbegin() + 1; it != terms_.rend(); ++it) {
    acc = acc * w.pow(prev - it->first) + LaurentPoly(it->second);
    prev = it->first;
  }
  if (prev > 0) acc = acc * w.pow(prev);
  return acc;
}

std::string DeltaPoly::text() const {
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
      os << "d^" << e;
    } else {
      os << abs.get_str() << "*d^" << e;
    }
  }
  return os.str();
}

namespace {

// Cached powers of the loop weight as Laurent polynomials.
const LaurentPoly& loop_weight_pow(int m) {
  static std::deque<LaurentPoly> cache{LaurentPoly(1), LaurentPoly::loop_weight()};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m)
    cache.push_back(cache.back() * cache[1]);
  return cache[m];
}

}  // namespace

std::optional<DeltaPoly> to_delta_poly(const LaurentPoly& p) {
  if (p.is_zero()) return DeltaPoly{};
  if (!p.is_symmetric_even()) return std::nullopt;
  // Peel by leading exponent: the loop-weight power w^m has leading term
  // (-1)^m A^{2m}, so the reduction is unitriangular.
  LaurentPoly cur = p;
  std::vector<DeltaPoly::Term> terms;
  while (!cur.is_zero()) {
    const int m = cur.max_exp() / 2;
    if (m < 0) return std::nullopt;
    Int c = cur.coeff(2 * m);
    if (m % 2 != 0) c = -c;
    cur -= loop_weight_pow(m).scaled(c);
    terms.emplace_back(m, std::move(c));
    if (!cur.is_zero() && cur.max_exp() / 2 >= m) return std::nullopt;
  }
  std::reverse(terms.begin(), terms.end());
  DeltaPoly r;
  for (auto& [e, c] : terms) r = r + DeltaPoly::monomial(std::move(c), e);
  return r;
}

std::optional<LaurentPoly> centered_symmetric_even(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  const int s = p.min_exp() + p.max_exp();
  if (s % 2 != 0) return std::nullopt;
  LaurentPoly q = p.shifted(-s / 2);
  if (!q.is_symmetric_even()) return std::nullopt;
  return q;
}

}  // namespace skein::alg
