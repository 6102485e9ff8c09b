#ifndef MSEM_PARALLEL_HPP
#define MSEM_PARALLEL_HPP

#include <cstdint>

#ifdef MSEM_HAVE_OPENMP
#include <omp.h>
#endif

namespace msem {

// Global thread count for the cell-parallel kernels. 1 = serial reference
// path. Parallelism is always over independent cells, each computed with the
// same serial arithmetic, so results are bitwise identical for any count.
int thread_count();
void set_thread_count(int n);

template <typename Body>
void parallel_for(std::int64_t n, Body&& body) {
#ifdef MSEM_HAVE_OPENMP
  if (thread_count() > 1) {
#pragma omp parallel for schedule(static) num_threads(thread_count())
    for (std::int64_t i = 0; i < n; ++i) body(i);
    return;
  }
#endif
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

// Serial loop kept as the reference implementation for the benchmark and the
// parallel-equivalence tests.
template <typename Body>
void serial_for(std::int64_t n, Body&& body) {
  for (std::int64_t i = 0; i < n; ++i) body(i);
}

}  // namespace msem

#endif
