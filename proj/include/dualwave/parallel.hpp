#pragma once

#include <cstddef>

namespace dualwave {

/// Worker cap: DUALWAVE_THREADS if set (>=1), otherwise the machine
/// parallelism reported by OpenMP. Read once, cached.
int max_threads();

/// Runs fn(i) for i in [0, n). Work item i is always executed start-to-end
/// by a single thread, so results are bit-identical for any thread count.
/// Reductions must be done by the caller in fixed index order.
template <typename F>
void parallel_for(std::size_t n, F&& fn) {
  const int threads = max_threads();
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
#pragma omp parallel for schedule(static) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    fn(static_cast<std::size_t>(i));
}

}  // namespace dualwave
