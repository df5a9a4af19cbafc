#pragma once

#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcinterp::par {

// Thread cap for sweep parallelism. QCINTERP_THREADS=0 (or unset) means
// "use the OpenMP default"; any positive value caps the team size.
inline int thread_cap() {
#ifdef _OPENMP
  int max = omp_get_max_threads();
  if (const char* env = std::getenv("QCINTERP_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0 && v < max) max = static_cast<int>(v);
  }
  return max;
#else
  return 1;
#endif
}

// Worth spinning up a team only for enough independent work items.
inline bool worth_parallel(long n) { return thread_cap() > 1 && n >= 256; }

}  // namespace qcinterp::par
