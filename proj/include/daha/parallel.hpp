#ifndef DAHA_PARALLEL_HPP
#define DAHA_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace daha {

// worker count: DAHA_JOBS if set, else the hardware concurrency
inline unsigned default_jobs() {
  if (const char* s = std::getenv("DAHA_JOBS")) {
    int v = std::atoi(s);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// out[i] = f(i) for i < count, evaluated on up to `jobs` threads; the first exception is rethrown
template <class F>
auto parallel_map(size_t count, F f, unsigned jobs = default_jobs()) {
  using R = decltype(f(size_t{0}));
  std::vector<R> out(count);
  jobs = static_cast<unsigned>(std::min<size_t>(jobs, count));
  if (jobs <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errs(jobs);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (size_t i; (i = next.fetch_add(1)) < count;) out[i] = f(i);
      } catch (...) {
        errs[w] = std::current_exception();
        next = count;
      }
    });
  for (auto& th : pool) th.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace daha

#endif
