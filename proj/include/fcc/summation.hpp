/**
 * \file summation.hpp
 * \brief Deterministic reductions and a small static-partition parallel map.
 *
 * Every sum in the library is formed in two steps: the terms are written to
 * an indexed buffer (possibly by several threads), then reduced serially by
 * a fixed pairwise tree.  The result is therefore bit-identical for any
 * thread count.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

namespace fcc {

namespace detail {

template <class T>
T pairwise_sum_impl(const T* p, std::size_t n) {
  constexpr std::size_t kLeaf = 16;
  if (n <= kLeaf) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
  }
  const std::size_t h = n / 2;
  return pairwise_sum_impl(p, h) + pairwise_sum_impl(p + h, n - h);
}

}  // namespace detail

/// Pairwise sum with a fixed reduction tree.
template <class T>
T pairwise_sum(std::span<const T> v) {
  return detail::pairwise_sum_impl(v.data(), v.size());
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(std::span<const T>(v));
}

/**
 * Worker count: FCC_TRIG_THREADS if set to a positive integer, otherwise
 * the hardware concurrency (0 or an unparsable value also means auto).
 */
inline unsigned thread_count() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("FCC_TRIG_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return hw;
}

/**
 * \brief out[i] = f(i) for i in [0, count), split into contiguous chunks.
 *
 * f must be safe to call concurrently.  An exception thrown by any call is
 * rethrown on the calling thread.
 */
template <class F>
auto parallel_map(std::size_t count, F&& f) {
  using R = std::decay_t<decltype(f(std::size_t{0}))>;
  std::vector<R> out(count);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), count / 64 + 1));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }

  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  const std::size_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t lo = w * chunk, hi = std::min(count, lo + chunk);
      try {
        for (std::size_t i = lo; i < hi; ++i) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

/// Deterministic sum of f(i) over i in [0, count).
template <class F>
auto parallel_sum(std::size_t count, F&& f) {
  return pairwise_sum(parallel_map(count, std::forward<F>(f)));
}

}  // namespace fcc
