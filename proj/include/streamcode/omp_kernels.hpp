#pragma once

// Index-space kernels shared by the exhaustive sweeps. Each has an OpenMP
// version and a plain serial reference that the tests hold it against; both
// return identical results for any thread count.

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>

#if defined(_OPENMP)
#include <omp.h>
#else
inline int omp_get_max_threads() { return 1; }
inline int omp_get_thread_num() { return 0; }
inline void omp_set_num_threads(int) {}
#endif

namespace sc {

namespace detail {

class ExceptionSlot {
 public:
  template <class F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard lock(mu_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mu_;
  std::exception_ptr error_;
};

}  // namespace detail

/// Smallest i in [0, count) with pred(i), or nullopt.
template <class Pred>
std::optional<std::size_t> serial_first_index(std::size_t count, Pred&& pred) {
  for (std::size_t i = 0; i < count; ++i)
    if (pred(i)) return i;
  return std::nullopt;
}

template <class Pred>
std::optional<std::size_t> parallel_first_index(std::size_t count, Pred&& pred) {
  std::atomic<std::size_t> best{count};
  detail::ExceptionSlot slot;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx >= best.load(std::memory_order_relaxed)) continue;
    slot.run([&] {
      if (!pred(idx)) return;
      std::size_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    });
  }
  slot.rethrow();
  const std::size_t r = best.load();
  if (r == count) return std::nullopt;
  return r;
}

template <class Pred>
std::size_t serial_count_if(std::size_t count, Pred&& pred) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < count; ++i) c += pred(i) ? 1 : 0;
  return c;
}

template <class Pred>
std::size_t parallel_count_if(std::size_t count, Pred&& pred) {
  std::size_t c = 0;
  detail::ExceptionSlot slot;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : c)
  for (std::int64_t i = 0; i < n; ++i) {
    slot.run([&] { c += pred(static_cast<std::size_t>(i)) ? 1 : 0; });
  }
  slot.rethrow();
  return c;
}

template <class Fn>
void serial_for(std::size_t count, Fn&& fn) {
  for (std::size_t i = 0; i < count; ++i) fn(i);
}

template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  detail::ExceptionSlot slot;
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) {
    slot.run([&] { fn(static_cast<std::size_t>(i)); });
  }
  slot.rethrow();
}

/// Sets the worker count for subsequent kernels; 0 keeps the runtime default.
inline void set_worker_count(int jobs) {
  if (jobs > 0) omp_set_num_threads(jobs);
}

}  // namespace sc
