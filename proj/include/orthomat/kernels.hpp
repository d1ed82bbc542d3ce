#pragma once

// Loop kernels shared by the exhaustive checkers and minor enumerations.
// Each has a serial reference and an OpenMP version; both return identical
// results (the parallel search reports the smallest failing index, never
// the first one a thread happens to find).

#include <omp.h>

#include <atomic>
#include <cstddef>
#include <exception>
#include <limits>
#include <optional>
#include <vector>

namespace orthomat {

enum class Execution { Serial, Parallel };

namespace kernels {

inline constexpr std::size_t kNoFailure = std::numeric_limits<std::size_t>::max();

namespace serial {

template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Pred&& holds) {
  for (std::size_t i = 0; i < count; ++i)
    if (!holds(i)) return i;
  return std::nullopt;
}

template <class T, class F>
std::vector<T> map_indices(std::size_t count, F&& f) {
  std::vector<T> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
  return out;
}

}  // namespace serial

namespace omp {

template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Pred&& holds) {
  std::atomic<std::size_t> best{kNoFailure};
  std::exception_ptr error;
  std::size_t error_index = kNoFailure;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx > best.load(std::memory_order_relaxed)) continue;
    bool ok = true;
    try {
      ok = holds(idx);
    } catch (...) {
#pragma omp critical(orthomat_kernel_error)
      if (idx < error_index) {
        error_index = idx;
        error = std::current_exception();
      }
      ok = false;
    }
    if (!ok) {
      std::size_t cur = best.load(std::memory_order_relaxed);
      while (idx < cur && !best.compare_exchange_weak(cur, idx, std::memory_order_relaxed)) {
      }
    }
  }
  if (error && error_index == best.load()) std::rethrow_exception(error);
  std::size_t b = best.load();
  if (b == kNoFailure) return std::nullopt;
  return b;
}

template <class T, class F>
std::vector<T> map_indices(std::size_t count, F&& f) {
  std::vector<T> out(count);
  std::exception_ptr error;
  std::size_t error_index = kNoFailure;
  const auto n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 8)
  for (long long i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    try {
      out[idx] = f(idx);
    } catch (...) {
#pragma omp critical(orthomat_kernel_error)
      if (idx < error_index) {
        error_index = idx;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace omp

// Smallest i in [0, count) with !holds(i), or nullopt when all hold.
template <class Pred>
std::optional<std::size_t> first_failure(std::size_t count, Pred&& holds, Execution exec) {
  if (exec == Execution::Serial) return serial::first_failure(count, holds);
  return omp::first_failure(count, holds);
}

template <class T, class F>
std::vector<T> map_indices(std::size_t count, F&& f, Execution exec) {
  if (exec == Execution::Serial) return serial::map_indices<T>(count, f);
  return omp::map_indices<T>(count, f);
}

}  // namespace kernels
}  // namespace orthomat
