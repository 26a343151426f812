#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace suppgeo {

enum class Exec { Serial, Parallel };

// Runs fn(i) for i in [0, n). Callers write results into disjoint
// preallocated slots, so the outcome is identical for both policies and for
// any thread count.
template <class F>
void parallel_for(std::size_t n, Exec exec, F&& fn) {
#ifdef _OPENMP
  if (exec == Exec::Parallel && n > 1) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      fn(static_cast<std::size_t>(i));
    }
    return;
  }
#endif
  (void)exec;
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Stable per-trial sub-seed so every trial's inputs are reproducible in
// isolation and shared across parameter cells.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  return splitmix64(seed ^ splitmix64(stream + 1));
}

}  // namespace suppgeo
