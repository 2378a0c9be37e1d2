// Times the OpenMP kernels against their serial reference implementations and
// verifies that both produce identical results.

#include <omp.h>

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "skein/detkernel.hpp"
#include "skein/exec.hpp"
#include "skein/gram.hpp"
#include "skein/paths.hpp"

using skein::Exec;

namespace {

struct Row {
  const char* name;
  double serial_ms;
  double parallel_ms;
  bool match;
};

template <typename F>
double time_ms(F&& f) {
  const double t0 = omp_get_wtime();
  f();
  return (omp_get_wtime() - t0) * 1e3;
}

Row bench_assembly(int n, int h) {
  skein::gram::GramMatrix a, b;
  const double ts = time_ms([&] {
    a = skein::gram::gram_matrix(n, h, skein::gram::Basis::B, Exec::serial);
  });
  const double tp = time_ms([&] {
    b = skein::gram::gram_matrix(n, h, skein::gram::Basis::B, Exec::parallel);
  });
  return {"gram assembly", ts, tp, a.entries == b.entries};
}

Row bench_symbolic_det(int n, int h) {
  const skein::gram::GramMatrix m =
      skein::gram::gram_matrix(n, h, skein::gram::Basis::B, Exec::parallel);
  skein::alg::RationalFunc a, b;
  const double ts = time_ms([&] { a = det_fraction_free(m, Exec::serial); });
  const double tp = time_ms([&] { b = det_fraction_free(m, Exec::parallel); });
  return {"symbolic determinant", ts, tp, a == b};
}

Row bench_numeric_det(int n, int h) {
  const mpq_class point(3, 2);
  mpq_class a, b;
  const double ts = time_ms(
      [&] { a = skein::gram::det_b_matrix_at(n, h, point, Exec::serial); });
  const double tp = time_ms(
      [&] { b = skein::gram::det_b_matrix_at(n, h, point, Exec::parallel); });
  return {"numeric determinant", ts, tp, a == b};
}

Row bench_alpha(int n) {
  long long a = 0, b = 0;
  const double ts = time_ms([&] {
    for (int h = n % 2; h <= n; h += 2)
      for (int k = 1; k <= (n + h) / 2; ++k)
        a += skein::paths::alpha_enumerate(n, h, k, Exec::serial);
  });
  const double tp = time_ms([&] {
    for (int h = n % 2; h <= n; h += 2)
      for (int k = 1; k <= (n + h) / 2; ++k)
        b += skein::paths::alpha_enumerate(n, h, k, Exec::parallel);
  });
  return {"path statistics", ts, tp, a == b};
}

}  // namespace

int main(int argc, char** argv) {
  skein::apply_thread_env();
  CLI::App app{"serial vs OpenMP kernel comparison"};
  bool heavy = false;
  app.add_flag("--heavy", heavy, "larger problem sizes");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads: %d\n\n", skein::worker_count());
  std::printf("%-22s %12s %12s %9s %7s\n", "kernel", "serial(ms)",
              "parallel(ms)", "speedup", "match");

  Row rows[] = {
      bench_assembly(heavy ? 12 : 10, 2),
      bench_symbolic_det(heavy ? 10 : 9, heavy ? 2 : 1),
      bench_numeric_det(heavy ? 13 : 12, heavy ? 1 : 0),
      bench_alpha(heavy ? 18 : 16),
  };
  bool all_match = true;
  for (const Row& r : rows) {
    std::printf("%-22s %12.1f %12.1f %8.2fx %7s\n", r.name, r.serial_ms,
                r.parallel_ms, r.serial_ms / r.parallel_ms,
                r.match ? "yes" : "NO");
    all_match = all_match && r.match;
  }
  return all_match ? 0 : 1;
}
