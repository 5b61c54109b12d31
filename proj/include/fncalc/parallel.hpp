#ifndef FNCALC_PARALLEL_HPP
#define FNCALC_PARALLEL_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fncalc {

/// Global switch between the OpenMP kernels and their serial twins.
/// Defaults to on; tests and the benchmark flip it to compare the two paths.
void set_parallel(bool on);
bool parallel_enabled();

/// Run f(i) for i in [0, n). Iterations must be independent; each one writes
/// only to its own slot, so results are identical on both paths.
template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
  if (parallel_enabled() && n > 1 && !omp_in_parallel()) {
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      f(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) f(i);
}

} // namespace fncalc

#endif
