#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace momo {

/// Worker budget for one statistic. Results never depend on `threads`:
/// workers fill disjoint index ranges and every reduction runs afterwards
/// in ascending order on the calling thread.
struct Exec {
  unsigned threads = 1;
};

/// Cap from MOMO_THREADS, or the hardware concurrency when unset/invalid.
inline unsigned env_thread_cap() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MOMO_THREADS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(std::min<unsigned long>(v, 1024));
  }
  return hw;
}

namespace detail {

/// Calls fn(begin, end) on contiguous chunks of [0, n), one chunk per worker.
template <class Fn>
void parallel_chunks(std::uint64_t n, unsigned threads, Fn&& fn) {
  const std::uint64_t workers = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, n));
  if (workers <= 1) {
    if (n > 0) fn(std::uint64_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  const std::uint64_t step = n / workers, extra = n % workers;
  std::uint64_t begin = 0;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t end = begin + step + (w < extra ? 1 : 0);
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
    begin = end;
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace detail
}  // namespace momo
