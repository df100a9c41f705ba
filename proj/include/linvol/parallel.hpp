#pragma once

#include <cstddef>
#include <exception>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace linvol {

/// Serial is the reference path; Parallel fans out over OpenMP when it is
/// compiled in and falls back to the serial loop otherwise. Results must be
/// written to per-index slots so both paths produce identical output.
enum class Exec { Serial, Parallel };

template <typename Fn>
void parallelFor(Exec exec, std::size_t n, Fn&& fn) {
#ifdef _OPENMP
  if (exec == Exec::Parallel && n > 1) {
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(n); ++i) {
      try {
        fn(static_cast<std::size_t>(i));
      } catch (...) {
#pragma omp critical
        if (!err) err = std::current_exception();
      }
    }
    if (err) std::rethrow_exception(err);
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i);
}

inline int hardwareThreads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace linvol
