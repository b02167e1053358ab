#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <type_traits>
#include <vector>

namespace mhdlab {

// Applies fn to every item on up to `jobs` threads and returns the results
// in item order. Results do not depend on the job count; with jobs <= 1
// everything runs on the calling thread. When several items throw, the one
// with the lowest index wins, matching what a sequential loop would raise.
template <typename T, typename F>
auto parallel_map(const std::vector<T>& items, F&& fn, int jobs)
    -> std::vector<std::invoke_result_t<F&, const T&>> {
  using R = std::invoke_result_t<F&, const T&>;
  std::vector<R> results;
  results.reserve(items.size());

  const std::size_t workers =
      std::min<std::size_t>(items.size(), jobs > 1 ? static_cast<std::size_t>(jobs) : 1);
  if (workers <= 1) {
    for (const T& item : items) results.push_back(fn(item));
    return results;
  }

  std::vector<std::optional<R>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= items.size()) return;
      try {
        slots[i].emplace(fn(items[i]));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace mhdlab
