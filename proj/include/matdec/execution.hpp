#pragma once

#include <cstddef>
#include <functional>

namespace matdec {

/// How candidate-level loops run. Serial is the reference path; Parallel
/// shards the same loop body over OpenMP threads. Results are always written
/// to per-index slots and folded in index order, so both produce identical
/// output.
struct Execution {
  enum class Mode { Serial, Parallel };
  Mode mode = Mode::Serial;
  int jobs = 0;  // 0 = OpenMP default

  static Execution serial() { return {}; }
  static Execution parallel(int jobs = 0) { return {Mode::Parallel, jobs}; }
  bool is_parallel() const noexcept { return mode == Mode::Parallel; }
};

bool openmp_available() noexcept;
int max_threads() noexcept;

/// Calls body(i) for i in [0, count). Under Parallel, iterations run
/// concurrently with dynamic scheduling; the first exception thrown by any
/// iteration is rethrown after the loop.
void for_each_index(std::size_t count, const Execution& exec, const std::function<void(std::size_t)>& body);

}  // namespace matdec
