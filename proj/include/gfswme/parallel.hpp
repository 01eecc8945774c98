#pragma once

#include <exception>
#include <limits>

namespace gfswme {

/// How per-cell and per-interface loops are executed.
enum class Execution {
  Serial,    ///< plain loop, the reference path
  Parallel,  ///< OpenMP worksharing loop
};

/// Runs f(i) for i in [begin, end). In parallel mode the exception thrown by
/// the lowest failing index is rethrown, so errors match the serial path.
template <class F>
void for_each_index(Execution exec, int begin, int end, F&& f) {
  if (exec == Execution::Serial || end - begin < 2) {
    for (int i = begin; i < end; ++i) f(i);
    return;
  }
  std::exception_ptr error;
  int error_index = std::numeric_limits<int>::max();
#pragma omp parallel for schedule(static)
  for (int i = begin; i < end; ++i) {
    try {
      f(i);
    } catch (...) {
#pragma omp critical(gfswme_for_each_index)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace gfswme
