#include "skein/bases.hpp"

#include <cstdlib>
#include <stdexcept>

#include "skein/paths.hpp"

namespace skein::bases {

using tl::PlanarMatching;
using tl::TLElement;

StepTuple::StepTuple(int n_, int h_, std::vector<int> a_)
    : n(n_), h(h_), a(std::move(a_)) {
  if (n < 1 || h < 0 || static_cast<int>(a.size()) != n)
    throw std::invalid_argument("tuple: bad length");
  if (a.front() != 1 || a.back() != h)
    throw std::invalid_argument("tuple: endpoints must be 1 and h");
  for (int i = 0; i < n; ++i) {
    if (a[i] < 0) throw std::invalid_argument("tuple: negative entry");
    if (i > 0 && std::abs(a[i] - a[i - 1]) != 1)
      throw std::invalid_argument("tuple: steps must change by 1");
  }
}

Ordering compare_tuples(const StepTuple& s, const StepTuple& t) {
  if (s.n != t.n || s.h != t.h)
    throw std::domain_error("compare_tuples: mismatched (n, h)");
  for (int i = 0; i < s.n; ++i) {
    if (s.a[i] > t.a[i]) return Ordering::greater;
    if (s.a[i] < t.a[i]) return Ordering::less;
  }
  return Ordering::equal;
}

std::vector<StepTuple> enumerate_tuples(int n, int h) {
  std::vector<StepTuple> out;
  if (n < 1 || h < 0 || h > n || (n - h) % 2 != 0) return out;
  std::vector<int> a(n);
  a[0] = 1;
  // Trying the up branch first yields descending lexicographic order.
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == n) {
      if (a[n - 1] == h) out.emplace_back(n, h, a);
      return;
    }
    const int rest = n - 1 - i;
    for (int next : {a[i - 1] + 1, a[i - 1] - 1}) {
      if (next < 0) continue;
      if (std::abs(next - h) > rest) continue;  // unreachable endpoint
      a[i] = next;
      self(self, i + 1);
    }
  };
  if (n == 1) {
    if (h == 1) out.emplace_back(1, 1, std::vector<int>{1});
  } else if (std::abs(1 - h) <= n - 1) {
    dfs(dfs, 1);
  }
  return out;
}

long long dimension(int n, int h) { return paths::count_paths_closed(n, h); }

PlanarMatching tuple_to_matching(const StepTuple& t) {
  const int n = t.n, h = t.h;
  std::vector<int> partner(n + h, -1);
  std::vector<int> open;
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    if (t.a[i] == prev + 1) {
      open.push_back(i);
    } else {
      // Down step: cap against the nearest unmatched point to the left.
      const int j = open.back();
      open.pop_back();
      partner[i] = j;
      partner[j] = i;
    }
    prev = t.a[i];
  }
  // The surviving strands run to the top points in order.
  for (int j = 0; j < h; ++j) {
    partner[open[j]] = n + j;
    partner[n + j] = open[j];
  }
  return PlanarMatching(n, h, std::move(partner));
}

namespace {

const TLElement& jw_or_identity(int h) {
  static const TLElement empty = TLElement::identity(0);
  if (h == 0) return empty;
  return tl::jones_wenzl(h);
}

}  // namespace

TLElement b_element(const StepTuple& t) {
  TLElement bare(tuple_to_matching(t));
  if (t.h <= 1) return bare;
  return compose(bare, jw_or_identity(t.h));
}

TLElement b_prime_element(const StepTuple& t) {
  return TLElement(tuple_to_matching(t));
}

TLElement d_element(const StepTuple& t) {
  TLElement cur = TLElement::identity(1);  // one strand, color a_1 = 1
  for (int i = 1; i < t.n; ++i) {
    const int prev = t.a[i - 1];
    const int next = t.a[i];
    TLElement widened = tensor(cur, TLElement::identity(1));
    if (next == prev + 1) {
      cur = compose(widened, jw_or_identity(next));
    } else {
      // Turn the rightmost strand of the bundle back onto the new point.
      TLElement cap = tensor(TLElement::identity(prev - 1),
                             TLElement(PlanarMatching::cup()));
      cur = compose(compose(widened, cap), jw_or_identity(next));
    }
  }
  return cur;
}

}  // namespace skein::bases
