#ifndef PILAB_SRC_PARALLEL_HPP
#define PILAB_SRC_PARALLEL_HPP

#include <cstdint>
#include <exception>
#include <vector>

#include "pilab/common.hpp"

namespace pilab::detail {

/// Runs f(0..n-1), on OpenMP threads under the parallel policy. Exceptions
/// are caught per index and the one with the smallest index is rethrown,
/// so failures are reported the same way as in a serial run.
template <class F>
void parallel_for(std::size_t n, ExecPolicy policy, F&& f) {
  std::vector<std::exception_ptr> errors(n);
  const auto count = static_cast<std::int64_t>(n);
  if (policy == ExecPolicy::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        f(static_cast<std::size_t>(i));
      } catch (...) {
        errors[static_cast<std::size_t>(i)] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace pilab::detail

#endif  // PILAB_SRC_PARALLEL_HPP
