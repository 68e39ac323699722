#include "matdec/execution.hpp"

#include <exception>
#include <mutex>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace matdec {

bool openmp_available() noexcept {
#if defined(_OPENMP)
  return true;
#else
  return false;
#endif
}

int max_threads() noexcept {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void for_each_index(std::size_t count, const Execution& exec, const std::function<void(std::size_t)>& body) {
  if (!exec.is_parallel() || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
#if defined(_OPENMP)
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const int threads = exec.jobs > 0 ? exec.jobs : omp_get_max_threads();
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
#else
  for (std::size_t i = 0; i < count; ++i) body(i);
#endif
}

}  // namespace matdec
