#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace gdecomp::detail {

/// Splits [0, count) into contiguous chunks, runs `work(begin, end)` on up to
/// `threads` threads and returns the chunk results in range order, so merged
/// output never depends on scheduling.
template <class Work>
auto map_chunks(std::uint64_t count, unsigned threads, Work work)
    -> std::vector<decltype(work(std::uint64_t{}, std::uint64_t{}))> {
  using Result = decltype(work(std::uint64_t{}, std::uint64_t{}));
  threads = std::max(1U, threads);
  const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, count));
  std::vector<Result> results(chunks);
  auto bounds = [&](std::uint64_t c) { return count * c / chunks; };
  if (chunks == 1) {
    results[0] = work(0, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  for (std::uint64_t c = 0; c < chunks; ++c) {
    pool.emplace_back([&, c] {
      try {
        results[c] = work(bounds(c), bounds(c + 1));
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

}  // namespace gdecomp::detail
