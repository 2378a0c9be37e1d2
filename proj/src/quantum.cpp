#include "skein/quantum.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>

namespace skein::alg {

const LaurentPoly& delta(int n) {
  if (n < -1) throw std::domain_error("delta: n < -1");
  // cache[0] = delta(-1), cache[i] = delta(i-1)
  static std::deque<LaurentPoly> cache{LaurentPoly{}, LaurentPoly(1)};
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  const LaurentPoly w = LaurentPoly::loop_weight();
  while (static_cast<int>(cache.size()) <= n + 1) {
    const std::size_t m = cache.size();
    cache.push_back(w * cache[m - 1] - cache[m - 2]);
  }
  return cache[n + 1];
}

DeltaPoly delta_in_delta_var(int n) {
  if (n < -1) throw std::domain_error("delta_in_delta_var: n < -1");
  DeltaPoly prev;           // value at -1
  DeltaPoly cur(1);         // value at 0
  if (n == -1) return prev;
  const DeltaPoly d = DeltaPoly::monomial(Int(1), 1);
  for (int m = 0; m < n; ++m) {
    DeltaPoly next = d * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

static void require_adjacent(int a, int b, const char* who) {
  if (a < 0 || b < 0 || (b != a - 1 && b != a + 1))
    throw std::domain_error(std::string(who) + ": colors must be adjacent and non-negative");
}

LaurentPoly theta_edge(int a_from, int a_to) {
  require_adjacent(a_from, a_to, "theta_edge");
  return a_to == a_from - 1 ? delta(a_from) : delta(a_to);
}

RationalFunc step_ratio(int a_i, int a_next) {
  require_adjacent(a_i, a_next, "step_ratio");
  if (a_next == a_i + 1) return RationalFunc::one();
  return RationalFunc(delta(a_i), delta(a_next));
}

}  // namespace skein::alg
