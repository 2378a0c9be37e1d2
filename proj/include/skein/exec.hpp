#pragma once

namespace skein {

// Execution policy for the data-parallel kernels. Every parallel kernel has a
// serial twin that produces bit-identical results; tests and the benchmark
// tool compare the two.
enum class Exec { serial, parallel };

// Number of workers the parallel kernels may use. Honors SKEIN_THREADS when
// set, otherwise the OpenMP default.
int worker_count();

// Applies SKEIN_THREADS (if set) to the OpenMP runtime. Call once at startup.
void apply_thread_env();

}  // namespace skein
