#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace shifted_hooks {

inline unsigned default_thread_count() { return std::max(1u, std::thread::hardware_concurrency()); }

/// out[i] = task(i) for i in [0, count), on up to `threads` workers. Results
/// land in index order, so any fold over `out` is independent of scheduling.
/// The first exception (by index) is rethrown after all workers finish.
template <typename F>
auto parallel_map(std::size_t count, unsigned threads, F&& task) {
  using R = decltype(task(std::size_t{}));
  std::vector<std::optional<R>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        slots[i].emplace(task(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<R> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace shifted_hooks
