#ifndef LINREZ_PARALLEL_HPP
#define LINREZ_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace linrez {

/// Worker count: an explicit request wins, then LINREZ_THREADS, then the
/// hardware concurrency. Always at least 1.
unsigned resolve_threads(std::optional<unsigned> requested = std::nullopt);

/// Evaluates f(0), ..., f(count - 1) on a shared work queue and returns the
/// results in index order. If any call throws, the exception of the lowest
/// failing index is rethrown after all workers stop.
template <class R, class F>
std::vector<R> parallel_map(std::size_t count, unsigned threads, F&& f) {
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      if (failed) break;
      try {
        slots[i].emplace(f(i));
      } catch (...) {
        errors[i] = std::current_exception();
        failed = true;
      }
    }
  };
  const std::size_t workers = std::min<std::size_t>(threads == 0 ? 1 : threads, count);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace linrez

#endif
