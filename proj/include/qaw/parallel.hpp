#pragma once

// Data-parallel loop helpers.  Every parallel kernel in the library has a
// serial twin selected by ExecPolicy::Serial; the tests compare the two.

#include <cstddef>
#include <exception>
#include <mutex>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace qaw {

enum class ExecPolicy { Serial, Parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

/// Calls fn(i) for i in [0, n).  Exceptions thrown by fn are captured and the
/// first one is rethrown after the loop; OpenMP regions must not unwind.
template <class Fn>
void parallel_for(std::size_t n, Fn&& fn, ExecPolicy policy = ExecPolicy::Parallel) {
  if (policy == ExecPolicy::Serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr first;
  std::mutex guard;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard<std::mutex> lock(guard);
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

/// out[i] = fn(i), ordered by index regardless of completion order.
template <class R, class Fn>
std::vector<R> parallel_map(std::size_t n, Fn&& fn, ExecPolicy policy = ExecPolicy::Parallel) {
  std::vector<R> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = fn(i); }, policy);
  return out;
}

}  // namespace qaw
