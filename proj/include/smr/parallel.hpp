#ifndef SMR_PARALLEL_HPP
#define SMR_PARALLEL_HPP

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace smr {

// Execution policy for the data-parallel sweeps. `serial` is the reference
// path; `openmp` distributes iterations across threads. Every sweep writes
// to disjoint per-index slots and aggregates in index order afterwards, so
// both policies produce identical results.
enum class Threading { serial, openmp };

inline Threading default_threading() {
#ifdef _OPENMP
  return Threading::openmp;
#else
  return Threading::serial;
#endif
}

// Runs body(i) for i in [0, count). With Threading::openmp the iterations
// run in parallel; body must only touch state private to its index.
template <typename Fn>
void parallel_for(std::uint64_t count, Threading threading, Fn&& body) {
#ifdef _OPENMP
  if (threading == Threading::openmp) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(count); ++i) {
      body(static_cast<std::uint64_t>(i));
    }
    return;
  }
#else
  (void)threading;
#endif
  for (std::uint64_t i = 0; i < count; ++i) {
    body(i);
  }
}

}  // namespace smr

#endif  // SMR_PARALLEL_HPP
