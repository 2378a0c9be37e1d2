#include "skein/detkernel.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <stdexcept>

namespace skein::detkernel {

PolyZ poly_normalize(PolyZ p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

PolyZ poly_add(const PolyZ& a, const PolyZ& b) {
  PolyZ r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return poly_normalize(std::move(r));
}

PolyZ poly_sub(const PolyZ& a, const PolyZ& b) {
  PolyZ r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return poly_normalize(std::move(r));
}

PolyZ poly_mul(const PolyZ& a, const PolyZ& b) {
  if (a.empty() || b.empty()) return {};
  PolyZ r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return r;
}

PolyZ poly_divide_exact(const PolyZ& a, const PolyZ& b) {
  if (b.empty()) throw std::domain_error("poly: division by zero");
  if (a.empty()) return {};
  if (a.size() < b.size()) throw std::domain_error("poly: inexact division");
  PolyZ rem = a;
  PolyZ q(a.size() - b.size() + 1);
  for (int qi = static_cast<int>(q.size()) - 1; qi >= 0; --qi) {
    Int& head = rem[qi + b.size() - 1];
    if (head == 0) continue;
    Int c, r;
    mpz_tdiv_qr(c.get_mpz_t(), r.get_mpz_t(), head.get_mpz_t(),
                b.back().get_mpz_t());
    if (r != 0) throw std::domain_error("poly: inexact division");
    for (std::size_t i = 0; i < b.size(); ++i)
      mpz_submul(rem[qi + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
    q[qi] = std::move(c);
  }
  for (const Int& c : rem)
    if (c != 0) throw std::domain_error("poly: inexact division");
  return poly_normalize(std::move(q));
}

Int poly_eval(const PolyZ& p, const Int& x) {
  Int acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Int det_integer_bareiss(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::domain_error("det: empty matrix");
  int sign = 1;
  Int prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (m[i][k] != 0) {
          r = i;
          break;
        }
      if (r < 0) return Int(0);
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = m[k][k] * m[i][j];
        mpz_submul(t.get_mpz_t(), m[i][k].get_mpz_t(), m[k][j].get_mpz_t());
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

// --- multimodular kernel ---------------------------------------------------

namespace {

struct MontCtx {
  std::uint64_t p;
  std::uint64_t ninv;  // -p^{-1} mod 2^64
  std::uint64_t r2;    // (2^64)^2 mod p
  std::uint64_t one;   // 2^64 mod p
};

std::uint64_t inv_pow64(std::uint64_t p) {
  std::uint64_t x = p;  // correct mod 2^3, doubles per step
  for (int i = 0; i < 5; ++i) x *= 2 - p * x;
  return x;
}

MontCtx make_ctx(std::uint64_t p) {
  MontCtx c;
  c.p = p;
  c.ninv = ~inv_pow64(p) + 1;
  const unsigned __int128 r = (unsigned __int128)1 << 64;
  c.one = static_cast<std::uint64_t>(r % p);
  c.r2 = static_cast<std::uint64_t>(((unsigned __int128)c.one * c.one) % p);
  return c;
}

inline std::uint64_t mont_mul(const MontCtx& c, std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 t = (unsigned __int128)a * b;
  const std::uint64_t m = static_cast<std::uint64_t>(t) * c.ninv;
  const std::uint64_t r =
      static_cast<std::uint64_t>((t + (unsigned __int128)m * c.p) >> 64);
  return r >= c.p ? r - c.p : r;
}

inline std::uint64_t mod_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mont_pow(const MontCtx& c, std::uint64_t base, std::uint64_t e) {
  std::uint64_t acc = c.one;
  while (e) {
    if (e & 1) acc = mont_mul(c, acc, base);
    base = mont_mul(c, base, base);
    e >>= 1;
  }
  return acc;
}

inline std::uint64_t mont_inv(const MontCtx& c, std::uint64_t a) {
  return mont_pow(c, a, c.p - 2);
}

// Determinant mod p by plain LU with row pivoting; a is row-major in the
// Montgomery domain and is destroyed.
std::uint64_t det_mod_lu(std::vector<std::uint64_t>& a, int n, const MontCtx& c) {
  std::uint64_t det = c.one;
  bool neg = false;
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (a[std::size_t(i) * n + k] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return 0;
    if (piv != k) {
      for (int j = k; j < n; ++j)
        std::swap(a[std::size_t(piv) * n + j], a[std::size_t(k) * n + j]);
      neg = !neg;
    }
    const std::uint64_t d = a[std::size_t(k) * n + k];
    det = mont_mul(c, det, d);
    const std::uint64_t inv = mont_inv(c, d);
    for (int i = k + 1; i < n; ++i) {
      const std::uint64_t f = mont_mul(c, a[std::size_t(i) * n + k], inv);
      if (f == 0) continue;
      const std::uint64_t* rk = &a[std::size_t(k) * n];
      std::uint64_t* ri = &a[std::size_t(i) * n];
      for (int j = k + 1; j < n; ++j)
        ri[j] = mod_sub(ri[j], mont_mul(c, f, rk[j]), c.p);
    }
  }
  std::uint64_t r = mont_mul(c, det, 1);  // leave the Montgomery domain
  if (neg && r != 0) r = c.p - r;
  return r;
}

// Symmetric elimination working on the upper triangle; roughly half the
// multiplications of LU. Falls back (returns false) when every remaining
// diagonal entry vanishes mod p while the block is nonzero.
bool det_mod_sym(std::vector<std::uint64_t>& a, int n, const MontCtx& c,
                 std::uint64_t& out) {
  std::uint64_t det = c.one;
  std::vector<std::uint64_t> w(n);
  for (int k = 0; k < n; ++k) {
    if (a[std::size_t(k) * n + k] == 0) {
      int piv = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[std::size_t(i) * n + i] != 0) {
          piv = i;
          break;
        }
      if (piv < 0) {
        bool all_zero = true;
        for (int i = k; i < n && all_zero; ++i)
          for (int j = i; j < n; ++j)
            if (a[std::size_t(i) * n + j] != 0) {
              all_zero = false;
              break;
            }
        if (all_zero) {
          out = 0;
          return true;
        }
        return false;  // nonzero block with zero diagonal: rare, use LU
      }
      // Symmetric swap of rows/columns k and piv keeps the determinant.
      for (int j = 0; j < n; ++j) {
        auto idx = [&](int r, int s) {
          return r <= s ? std::size_t(r) * n + s : std::size_t(s) * n + r;
        };
        if (j != k && j != piv) std::swap(a[idx(k, j)], a[idx(piv, j)]);
      }
      std::swap(a[std::size_t(k) * n + k], a[std::size_t(piv) * n + piv]);
    }
    const std::uint64_t d = a[std::size_t(k) * n + k];
    det = mont_mul(c, det, d);
    const std::uint64_t inv = mont_inv(c, d);
    const std::uint64_t* rk = &a[std::size_t(k) * n];
    for (int j = k + 1; j < n; ++j) w[j] = mont_mul(c, rk[j], inv);
    for (int i = k + 1; i < n; ++i) {
      const std::uint64_t f = rk[i];
      if (f == 0) continue;
      std::uint64_t* ri = &a[std::size_t(i) * n];
      for (int j = i; j < n; ++j)
        ri[j] = mod_sub(ri[j], mont_mul(c, f, w[j]), c.p);
    }
  }
  out = mont_mul(c, det, 1);
  return true;
}

const std::vector<std::uint64_t>& prime_pool(std::size_t need) {
  static std::vector<std::uint64_t> pool;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  static mpz_class cursor = (mpz_class(1) << 61) + 1;
  while (pool.size() < need) {
    mpz_class p;
    mpz_nextprime(p.get_mpz_t(), cursor.get_mpz_t());
    cursor = p;
    pool.push_back(p.get_ui());
  }
  return pool;
}

}  // namespace

Int det_integer_multimodular(const std::vector<std::vector<Int>>& m, Exec ex) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::domain_error("det: empty matrix");

  // Hadamard bound in bits.
  std::size_t bound_bits = 2;
  for (int i = 0; i < n; ++i) {
    Int norm2(0);
    for (int j = 0; j < n; ++j)
      mpz_addmul(norm2.get_mpz_t(), m[i][j].get_mpz_t(), m[i][j].get_mpz_t());
    if (norm2 == 0) return Int(0);
    bound_bits += (mpz_sizeinbase(norm2.get_mpz_t(), 2) + 1) / 2 + 1;
  }
  const std::size_t count = bound_bits / 60 + 2;
  const std::vector<std::uint64_t>& primes = prime_pool(count);

  bool symmetric = true;
  for (int i = 0; i < n && symmetric; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i][j] != m[j][i]) {
        symmetric = false;
        break;
      }

  std::vector<std::uint64_t> residues(count);
  auto run_prime = [&](std::size_t t) {
    const MontCtx c = make_ctx(primes[t]);
    std::vector<std::uint64_t> a(std::size_t(n) * n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::uint64_t r = mpz_fdiv_ui(m[i][j].get_mpz_t(), c.p);
        a[std::size_t(i) * n + j] = mont_mul(c, r, c.r2);
      }
    std::uint64_t det;
    if (!symmetric || !det_mod_sym(a, n, c, det)) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const std::uint64_t r = mpz_fdiv_ui(m[i][j].get_mpz_t(), c.p);
          a[std::size_t(i) * n + j] = mont_mul(c, r, c.r2);
        }
      det = det_mod_lu(a, n, c);
    }
    residues[t] = det;
  };

  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long t = 0; t < static_cast<long>(count); ++t) run_prime(t);
  } else {
    for (std::size_t t = 0; t < count; ++t) run_prime(t);
  }

  // Incremental CRT, then the balanced lift.
  Int x(0), mod(1);
  for (std::size_t t = 0; t < count; ++t) {
    const std::uint64_t p = primes[t];
    const MontCtx c = make_ctx(p);
    const std::uint64_t xm = mpz_fdiv_ui(x.get_mpz_t(), p);
    const std::uint64_t mm = mpz_fdiv_ui(mod.get_mpz_t(), p);
    const std::uint64_t diff = mod_sub(residues[t], xm, p);
    const std::uint64_t minv =
        mont_mul(c, mont_inv(c, mont_mul(c, mm, c.r2)), 1);  // m^{-1} mod p
    const std::uint64_t step = static_cast<std::uint64_t>(
        ((unsigned __int128)diff * minv) % p);
    Int add = mod;
    mpz_mul_ui(add.get_mpz_t(), add.get_mpz_t(), step);
    x += add;
    mpz_mul_ui(mod.get_mpz_t(), mod.get_mpz_t(), p);
  }
  if (x * 2 > mod) x -= mod;
  return x;
}

Int det_integer(const std::vector<std::vector<Int>>& m, Exec ex) {
  if (m.size() <= 40) return det_integer_bareiss(m);
  return det_integer_multimodular(m, ex);
}

PolyZ det_poly_bareiss(std::vector<std::vector<PolyZ>> m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::domain_error("det: empty matrix");
  int sign = 1;
  PolyZ prev{Int(1)};
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k].empty()) {
      int r = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].empty()) {
          r = i;
          break;
        }
      if (r < 0) return {};
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = poly_divide_exact(
            poly_sub(poly_mul(m[k][k], m[i][j]), poly_mul(m[i][k], m[k][j])),
            prev);
    prev = m[k][k];
  }
  PolyZ det = std::move(m[n - 1][n - 1]);
  if (sign < 0)
    for (Int& c : det) c = -c;
  return det;
}

PolyZ det_poly_interp(const std::vector<std::vector<PolyZ>>& m, Exec ex) {
  const int n = static_cast<int>(m.size());
  if (n == 0) throw std::domain_error("det: empty matrix");
  long deg_bound = 0;
  for (int i = 0; i < n; ++i) {
    long row = -1;
    for (int j = 0; j < n; ++j)
      if (!m[i][j].empty())
        row = std::max(row, static_cast<long>(m[i][j].size()) - 1);
    if (row < 0) return {};  // zero row
    deg_bound += row;
  }
  const long points = deg_bound + 1;

  std::vector<Int> values(points);
  auto eval_point = [&](long x) {
    Int xv(x);
    std::vector<std::vector<Int>> num(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) num[i][j] = poly_eval(m[i][j], xv);
    values[x] = det_integer_bareiss(std::move(num));
  };
  if (ex == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long x = 0; x < points; ++x) eval_point(x);
  } else {
    for (long x = 0; x < points; ++x) eval_point(x);
  }

  // Newton forward divided differences on the nodes 0..D; consecutive integer
  // nodes make the level-l denominators constant.
  std::vector<mpq_class> dd(points);
  for (long i = 0; i < points; ++i) dd[i] = mpq_class(values[i]);
  for (long l = 1; l < points; ++l)
    for (long i = points - 1; i >= l; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / l;
    }
  // Horner over the Newton basis.
  std::vector<mpq_class> acc{dd[points - 1]};
  for (long i = points - 2; i >= 0; --i) {
    acc.emplace_back(0);
    for (long j = static_cast<long>(acc.size()) - 1; j >= 1; --j) {
      acc[j] = acc[j - 1] - acc[j] * i;  // multiply by (x - i)
    }
    acc[0] = acc[0] * (-i) + dd[i];
  }
  PolyZ out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    acc[i].canonicalize();
    if (acc[i].get_den() != 1)
      throw std::logic_error("interpolation produced a non-integer coefficient");
    out[i] = acc[i].get_num();
  }
  return poly_normalize(std::move(out));
}

PolyZ det_poly(const std::vector<std::vector<PolyZ>>& m, Exec ex) {
  if (m.size() <= 12) return det_poly_bareiss(m);
  return det_poly_interp(m, ex);
}

}  // namespace skein::detkernel
