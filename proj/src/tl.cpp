#include "skein/tl.hpp"

#include "skein/quantum.hpp"

#include <omp.h>

#include <algorithm>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

namespace skein::tl {

using alg::Int;
using alg::LaurentPoly;

PlanarMatching::PlanarMatching(int n_bottom, int n_top, std::vector<int> partner)
    : nb_(n_bottom), nt_(n_top), partner_(std::move(partner)) {
  const int total = nb_ + nt_;
  if (nb_ < 0 || nt_ < 0 || total % 2 != 0 ||
      static_cast<int>(partner_.size()) != total)
    throw std::invalid_argument("matching: bad boundary data");
  for (int p = 0; p < total; ++p) {
    const int q = partner_[p];
    if (q < 0 || q >= total || q == p || partner_[q] != p)
      throw std::invalid_argument("matching: not a perfect matching");
  }
  // Planarity: walk the boundary cycle (bottom left to right, then top right
  // to left) and require properly nested arcs.
  std::vector<int> stack;
  std::vector<char> seen(total, 0);
  auto visit = [&](int p) {
    if (seen[partner_[p]]) {
      if (stack.empty() || stack.back() != partner_[p])
        throw std::invalid_argument("matching: crossing arcs");
      stack.pop_back();
    } else {
      stack.push_back(p);
    }
    seen[p] = 1;
  };
  for (int i = 0; i < nb_; ++i) visit(i);
  for (int j = nt_ - 1; j >= 0; --j) visit(nb_ + j);
}

PlanarMatching PlanarMatching::identity(int n) {
  if (n < 0) throw std::invalid_argument("identity: negative strand count");
  std::vector<int> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    partner[i] = n + i;
    partner[n + i] = i;
  }
  return PlanarMatching(n, n, std::move(partner));
}

PlanarMatching PlanarMatching::e_diagram(int n, int i) {
  if (i < 1 || i > n - 1) throw std::domain_error("e_i: index out of range");
  std::vector<int> partner(2 * n);
  for (int j = 0; j < n; ++j) {
    partner[j] = n + j;
    partner[n + j] = j;
  }
  partner[i - 1] = i;
  partner[i] = i - 1;
  partner[n + i - 1] = n + i;
  partner[n + i] = n + i - 1;
  return PlanarMatching(n, n, std::move(partner));
}

PlanarMatching PlanarMatching::cup() { return PlanarMatching(2, 0, {1, 0}); }
PlanarMatching PlanarMatching::cap() { return PlanarMatching(0, 2, {1, 0}); }

bool PlanarMatching::operator<(const PlanarMatching& o) const {
  if (nb_ != o.nb_) return nb_ < o.nb_;
  if (nt_ != o.nt_) return nt_ < o.nt_;
  return partner_ < o.partner_;
}

ComposedMatching compose_matchings(const PlanarMatching& x, const PlanarMatching& y) {
  if (x.n_top() != y.n_bottom())
    throw std::domain_error("compose: boundary mismatch");
  const int nb = x.n_bottom();
  const int m = x.n_top();
  const int p = y.n_top();
  std::vector<int> partner(nb + p, -1);
  std::vector<char> mid_used(m, 0);

  // Follow a strand from a final boundary point to its other end.
  auto walk = [&](bool from_x, int start) {
    bool in_x = from_x;
    int cur = start;
    while (true) {
      if (in_x) {
        const int nxt = x.partner(cur);
        if (nxt < nb) return nxt;  // final bottom
        const int t = nxt - nb;
        mid_used[t] = 1;
        in_x = false;
        cur = t;
      } else {
        const int nxt = y.partner(cur);
        if (nxt >= m) return nb + (nxt - m);  // final top
        mid_used[nxt] = 1;
        in_x = true;
        cur = nb + nxt;
      }
    }
  };
  for (int i = 0; i < nb; ++i) {
    if (partner[i] >= 0) continue;
    const int q = walk(true, i);
    partner[i] = q;
    partner[q] = i;
  }
  for (int j = 0; j < p; ++j) {
    if (partner[nb + j] >= 0) continue;
    const int q = walk(false, m + j);
    partner[nb + j] = q;
    partner[q] = nb + j;
  }

  int loops = 0;
  for (int t = 0; t < m; ++t) {
    if (mid_used[t]) continue;
    ++loops;
    int j = t;
    while (true) {
      mid_used[j] = 1;
      const int jx = x.partner(nb + j) - nb;  // x-arc stays in the middle
      mid_used[jx] = 1;
      const int jy = y.partner(jx);           // y-arc stays in the middle
      if (jy == t) break;
      j = jy;
    }
  }
  return {PlanarMatching(nb, p, std::move(partner)), loops};
}

GlueCycles glue_cycles(const PlanarMatching& a, const PlanarMatching& b) {
  if (a.n_bottom() != b.n_bottom() || a.n_top() != b.n_top())
    throw std::domain_error("glue: boundary mismatch");
  const int total = a.points();
  std::vector<int> comp(total, -1);
  GlueCycles out;
  for (int p0 = 0; p0 < total; ++p0) {
    if (comp[p0] >= 0) continue;
    const int id = out.cycles++;
    int p = p0;
    do {
      comp[p] = id;
      p = a.partner(p);
      comp[p] = id;
      p = b.partner(p);
    } while (p != p0);
  }
  std::vector<char> used(out.cycles, 0);
  for (int j = a.n_bottom(); j < total; ++j) {
    if (used[comp[j]]) {
      out.tops_distinct = false;
      break;
    }
    used[comp[j]] = 1;
  }
  return out;
}

std::vector<PlanarMatching> enumerate_matchings(int n_bottom, int n_top) {
  const int total = n_bottom + n_top;
  std::vector<PlanarMatching> out;
  if (total % 2 != 0) return out;
  std::vector<int> cyc;
  cyc.reserve(total);
  for (int i = 0; i < n_bottom; ++i) cyc.push_back(i);
  for (int j = n_top - 1; j >= 0; --j) cyc.push_back(n_bottom + j);

  std::vector<int> partner(total, -1);
  std::vector<int> open;
  // Every leaf of the open/close walk is one properly nested arc diagram.
  auto dfs = [&](auto&& self, int pos) -> void {
    if (pos == total) {
      if (open.empty()) out.emplace_back(n_bottom, n_top, partner);
      return;
    }
    const int p = cyc[pos];
    if (!open.empty()) {
      const int q = open.back();
      open.pop_back();
      partner[p] = q;
      partner[q] = p;
      self(self, pos + 1);
      partner[p] = partner[q] = -1;
      open.push_back(q);
    }
    if (static_cast<int>(open.size()) + 1 <= total - pos - 1) {
      open.push_back(p);
      self(self, pos + 1);
      open.pop_back();
    }
  };
  dfs(dfs, 0);
  return out;
}

TLElement::TLElement(const PlanarMatching& m) : nb_(m.n_bottom()), nt_(m.n_top()) {
  combo_.emplace(m, RationalFunc::one());
}

TLElement TLElement::identity(int n) { return TLElement(PlanarMatching::identity(n)); }

TLElement TLElement::generator_e(int n, int i) {
  return TLElement(PlanarMatching::e_diagram(n, i));
}

void TLElement::add_term(const PlanarMatching& m, const RationalFunc& c) {
  if (c.is_zero()) return;
  if (m.n_bottom() != nb_ || m.n_top() != nt_)
    throw std::domain_error("element: boundary mismatch");
  auto [it, inserted] = combo_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) combo_.erase(it);
  }
}

TLElement operator+(const TLElement& a, const TLElement& b) {
  if (a.nb_ != b.nb_ || a.nt_ != b.nt_)
    throw std::domain_error("element sum: boundary mismatch");
  TLElement r = a;
  for (const auto& [m, c] : b.combo_) r.add_term(m, c);
  return r;
}

TLElement operator-(const TLElement& a, const TLElement& b) {
  return a + b.scaled(-RationalFunc::one());
}

TLElement TLElement::scaled(const RationalFunc& c) const {
  TLElement r(nb_, nt_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : combo_) r.combo_.emplace(m, v * c);
  return r;
}

namespace {

const RationalFunc& loop_pow(int m) {
  static std::deque<RationalFunc> cache{RationalFunc::one(),
                                        RationalFunc(LaurentPoly::loop_weight())};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) <= m)
    cache.push_back(cache.back() * cache[1]);
  return cache[m];
}

}  // namespace

TLElement compose(const TLElement& x, const TLElement& y, Exec ex) {
  if (x.n_top() != y.n_bottom())
    throw std::domain_error("compose: boundary mismatch");
  TLElement r(x.n_bottom(), y.n_top());
  if (x.is_zero() || y.is_zero()) return r;

  if (ex == Exec::serial || x.size() < 64) {
    for (const auto& [mx, cx] : x.combo())
      for (const auto& [my, cy] : y.combo()) {
        auto [m, loops] = compose_matchings(mx, my);
        r.add_term(m, cx * cy * loop_pow(loops));
      }
    return r;
  }

  std::vector<const std::pair<const PlanarMatching, RationalFunc>*> rows;
  rows.reserve(x.size());
  for (const auto& term : x.combo()) rows.push_back(&term);
  loop_pow(x.n_top());  // warm the cache before threads fork
  TLElement acc(x.n_bottom(), y.n_top());
#pragma omp parallel
  {
    TLElement local(x.n_bottom(), y.n_top());
#pragma omp for schedule(dynamic, 8) nowait
    for (long idx = 0; idx < static_cast<long>(rows.size()); ++idx) {
      const auto& [mx, cx] = *rows[idx];
      for (const auto& [my, cy] : y.combo()) {
        auto [m, loops] = compose_matchings(mx, my);
        local.add_term(m, cx * cy * loop_pow(loops));
      }
    }
#pragma omp critical(skein_tl_compose_merge)
    {
      for (const auto& [m, c] : local.combo()) acc.add_term(m, c);
    }
  }
  return acc;
}

TLElement tensor(const TLElement& x, const TLElement& y) {
  const int nb = x.n_bottom() + y.n_bottom();
  const int nt = x.n_top() + y.n_top();
  TLElement r(nb, nt);
  auto remap = [&](const PlanarMatching& mx, const PlanarMatching& my) {
    std::vector<int> partner(nb + nt);
    auto xi = [&](int p) { return p < mx.n_bottom() ? p : nb + (p - mx.n_bottom()); };
    auto yi = [&](int p) {
      return p < my.n_bottom() ? x.n_bottom() + p
                               : nb + x.n_top() + (p - my.n_bottom());
    };
    for (int p = 0; p < mx.points(); ++p) partner[xi(p)] = xi(mx.partner(p));
    for (int p = 0; p < my.points(); ++p) partner[yi(p)] = yi(my.partner(p));
    return PlanarMatching(nb, nt, std::move(partner));
  };
  for (const auto& [mx, cx] : x.combo())
    for (const auto& [my, cy] : y.combo()) r.add_term(remap(mx, my), cx * cy);
  return r;
}

TLElement mirror(const TLElement& x) {
  const int nb = x.n_top(), nt = x.n_bottom();
  TLElement r(nb, nt);
  for (const auto& [m, c] : x.combo()) {
    std::vector<int> partner(nb + nt);
    auto flip = [&](int p) { return p < nt ? nb + p : p - nt; };
    for (int p = 0; p < m.points(); ++p) partner[flip(p)] = flip(m.partner(p));
    r.add_term(PlanarMatching(nb, nt, std::move(partner)), c);
  }
  return r;
}

RationalFunc trace_closure(const TLElement& x) {
  if (x.n_bottom() != x.n_top())
    throw std::domain_error("trace: element is not square");
  RationalFunc total;
  const PlanarMatching closure = PlanarMatching::identity(x.n_bottom());
  for (const auto& [m, c] : x.combo())
    total += c * loop_pow(glue_cycles(m, closure).cycles);
  return total;
}

const TLElement& jones_wenzl(int n) {
  if (n < 1) throw std::domain_error("jones_wenzl: n < 1");
  static std::deque<TLElement> cache{TLElement::identity(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(cache.size()) < n) {
    const int m = static_cast<int>(cache.size()) + 1;  // building f_m
    const TLElement t = tensor(cache[m - 2], TLElement::identity(1));
    const TLElement turnback =
        compose(compose(t, TLElement::generator_e(m, m - 1)), t);
    const RationalFunc coeff(alg::delta(m - 2), alg::delta(m - 1));
    cache.push_back(t - turnback.scaled(coeff));
  }
  return cache[n - 1];
}

TLElement bracket_evaluate(const TangleWord& w) {
  if (w.n < 0) throw std::invalid_argument("bracket: negative strand count");
  TLElement cur = TLElement::identity(w.n);
  const RationalFunc a_pos(LaurentPoly::monomial(Int(1), 1));
  const RationalFunc a_neg(LaurentPoly::monomial(Int(1), -1));
  for (const auto& letter : w.letters) {
    TLElement next(w.n, w.n);
    switch (letter.kind) {
      case TangleLetter::Kind::e:
        next = TLElement::generator_e(w.n, letter.i);
        break;
      case TangleLetter::Kind::sigma_pos:
        next = TLElement::identity(w.n).scaled(a_pos) +
               TLElement::generator_e(w.n, letter.i).scaled(a_neg);
        break;
      case TangleLetter::Kind::sigma_neg:
        next = TLElement::identity(w.n).scaled(a_neg) +
               TLElement::generator_e(w.n, letter.i).scaled(a_pos);
        break;
    }
    cur = compose(cur, next);
  }
  return cur;
}

}  // namespace skein::tl
