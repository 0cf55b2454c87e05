#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace monolab {

// Execution policy for the data-parallel kernels (sample sweeps, optimizer
// restarts). Serial is the reference path; OpenMP must produce bit-identical
// results, which the kernels guarantee by writing independent slots and
// reducing serially afterwards.
enum class Exec { serial, openmp };

inline Exec default_exec() {
#ifdef _OPENMP
  return Exec::openmp;
#else
  return Exec::serial;
#endif
}

inline int hardware_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs fn(i) for i in [0, n). Results must be written to per-index slots.
// Exceptions are captured per index and the lowest-index one is rethrown
// after the loop, so serial and OpenMP runs fail identically.
template <typename Fn>
void for_each_index(std::int64_t n, Exec exec, Fn&& fn) {
  if (n <= 0) return;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
  auto guarded = [&](std::int64_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  };
  if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
#else
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
#endif
  } else {
    for (std::int64_t i = 0; i < n; ++i) guarded(i);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace monolab
