#include "skein/exec.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace skein {

static int env_thread_cap() {
  const char* v = std::getenv("SKEIN_THREADS");
  if (!v || !*v) return 0;
  int n = std::atoi(v);
  return n > 0 ? n : 0;
}

int worker_count() {
  int cap = env_thread_cap();
  int omp = omp_get_max_threads();
  if (cap > 0 && cap < omp) return cap;
  return omp;
}

void apply_thread_env() {
  int cap = env_thread_cap();
  if (cap > 0) omp_set_num_threads(cap);
}

}  // namespace skein
