#include "skein/paths.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace skein::paths {

DyckPath::DyckPath(std::string steps) : steps_(std::move(steps)) {
  int height = 0;
  for (char c : steps_) {
    if (c == 'U') {
      ++height;
    } else if (c == 'D') {
      --height;
    } else {
      throw std::invalid_argument("path: steps must be U or D");
    }
    if (height < 0) throw std::invalid_argument("path: goes below the axis");
  }
}

int DyckPath::end_height() const {
  int h = 0;
  for (char c : steps_) h += (c == 'U') ? 1 : -1;
  return h;
}

std::vector<int> DyckPath::heights() const {
  std::vector<int> a(steps_.size() + 1, 0);
  for (std::size_t i = 0; i < steps_.size(); ++i)
    a[i + 1] = a[i] + (steps_[i] == 'U' ? 1 : -1);
  return a;
}

std::vector<DyckPath> enumerate_paths(int n, int h) {
  std::vector<DyckPath> out;
  if (n < 0 || h < 0 || h > n || (n - h) % 2 != 0) return out;
  std::string steps(n, 'U');
  auto dfs = [&](auto&& self, int pos, int height) -> void {
    if (pos == n) {
      if (height == h) out.emplace_back(steps);
      return;
    }
    const int rest = n - pos - 1;
    // Up first keeps the output lexicographic with U < D.
    if (std::abs(height + 1 - h) <= rest) {
      steps[pos] = 'U';
      self(self, pos + 1, height + 1);
    }
    if (height >= 1 && std::abs(height - 1 - h) <= rest) {
      steps[pos] = 'D';
      self(self, pos + 1, height - 1);
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  if (!b.fits_slong_p()) throw std::overflow_error("binomial overflow");
  return b.get_si();
}

}  // namespace

long long count_paths_closed(int n, int h) {
  if (n < 0 || h < 0 || h > n || (n - h) % 2 != 0) return 0;
  const long long m = (static_cast<long long>(n) + h) / 2;
  return binom(n, m) - binom(n, m + 1);
}

std::vector<int> down_steps(const DyckPath& p, int k) {
  if (k < 1) throw std::domain_error("down_steps: k must be positive");
  std::vector<int> out;
  const std::vector<int> a = p.heights();
  for (int i = 1; i + 1 <= p.length(); ++i)
    if (a[i] == k && a[i + 1] == k - 1) out.push_back(i);
  return out;
}

long long alpha_enumerate(int n, int h, int k, Exec ex) {
  if (k < 1) throw std::domain_error("alpha: k must be positive");
  const std::vector<DyckPath> all = enumerate_paths(n, h);
  long long total = 0;
  if (ex == Exec::parallel) {
#pragma omp parallel for reduction(+ : total) schedule(static)
    for (long i = 0; i < static_cast<long>(all.size()); ++i)
      total += static_cast<long long>(down_steps(all[i], k).size());
  } else {
    for (const DyckPath& p : all)
      total += static_cast<long long>(down_steps(p, k).size());
  }
  return total;
}

long long alpha_closed(int n, int h, int k) {
  if (k < 1) throw std::domain_error("alpha: k must be positive");
  if (n < 0 || h < 0 || (n - h) % 2 != 0) return 0;
  const int s = std::min(k - 1, h);
  const long long base = (static_cast<long long>(n) + h) / 2;
  return binom(n, base + k - s) - binom(n, base + k + 1);
}

namespace {

// Reverse a step segment and swap U <-> D; the vertical reflection of the
// cut-and-glue construction.
std::string flip_reverse(const std::string& s) {
  std::string r(s.rbegin(), s.rend());
  for (char& c : r) c = (c == 'U') ? 'D' : 'U';
  return r;
}

}  // namespace

ThetaImage theta_map(const MarkedPath& m, int k, LowestPointRule rule) {
  const int n = m.path.length();
  const std::vector<int> a = m.path.heights();
  const int i = m.index;
  if (k < 1 || i < 1 || i > n - 1 || a[i] != k || a[i + 1] != k - 1)
    throw std::domain_error("theta: not a valid k-marked path");

  // Largest cut position i' <= i entering height k from below.
  int ip = -1;
  for (int t = i; t >= 1; --t) {
    if (a[t] == k && a[t - 1] == k - 1) {
      ip = t;
      break;
    }
  }
  if (ip < 0) throw std::domain_error("theta: no admissible cut");

  // Lowest point of the tail, leftmost or rightmost by rule.
  int j = a[ip];
  for (int t = ip; t <= n; ++t) j = std::min(j, a[t]);
  int l = -1;
  if (rule == LowestPointRule::leftmost) {
    for (int t = ip; t <= n; ++t)
      if (a[t] == j) {
        l = t;
        break;
      }
  } else {
    for (int t = n; t >= ip; --t)
      if (a[t] == j) {
        l = t;
        break;
      }
  }

  const std::string& s = m.path.steps();
  const std::string left = s.substr(0, ip);
  const std::string middle = s.substr(ip, l - ip);
  const std::string right = s.substr(l);
  // Reflecting the glued tail twice leaves the far segment in place, so the
  // image is L, then R, then the reflected middle.
  return ThetaImage{DyckPath(left + right + flip_reverse(middle)), j};
}

MarkedPath phi_map(const DyckPath& p, int k, int h, LowestPointRule rule) {
  const int n = p.length();
  const int end = p.end_height();
  if (k < 1 || h < 0 || (end - h) % 2 != 0)
    throw std::domain_error("phi: endpoint height not of the form 2k-2j+h");
  const int j = (2 * k + h - end) / 2;
  if (j < 0 || j > std::min(k - 1, h))
    throw std::domain_error("phi: endpoint height not of the form 2k-2j+h");

  const std::vector<int> a = p.heights();
  // Largest m with a_{m-1} = k-1, a_m = k, a_{m+1} = k+1.
  int m = -1;
  for (int t = n - 1; t >= 1; --t) {
    if (a[t] == k && a[t - 1] == k - 1 && a[t + 1] == k + 1) {
      m = t;
      break;
    }
  }
  if (m < 0) throw std::domain_error("phi: no admissible cut");

  const std::string& s = p.steps();
  const std::string left = s.substr(0, m);
  const std::string tail = flip_reverse(s.substr(m));
  // Heights along the reflected tail, re-based at the cut height k.
  std::vector<int> c(tail.size() + 1, k);
  for (std::size_t t = 0; t < tail.size(); ++t)
    c[t + 1] = c[t] + (tail[t] == 'U' ? 1 : -1);
  int v = -1;
  if (rule == LowestPointRule::leftmost) {
    for (int t = 1; t <= static_cast<int>(tail.size()); ++t)
      if (c[t] == j) {
        v = t;
        break;
      }
  } else {
    for (int t = static_cast<int>(tail.size()); t >= 1; --t)
      if (c[t] == j) {
        v = t;
        break;
      }
  }
  if (v < 0) throw std::domain_error("phi: level j not reached");

  const std::string middle = tail.substr(0, v);
  const std::string far = flip_reverse(tail.substr(v));
  DyckPath out(left + middle + far);

  const std::vector<int> b = out.heights();
  int mark = -1;
  for (int t = m; t <= n - 1; ++t) {
    if (b[t] == k && b[t + 1] == k - 1) {
      mark = t;
      break;
    }
  }
  if (mark < 0) throw std::domain_error("phi: no marked step recovered");
  return MarkedPath{std::move(out), mark};
}

}  // namespace skein::paths
