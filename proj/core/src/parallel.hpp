#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace skewminor::detail {

/// Runs fn(begin, end) over [0, count) in fixed-size chunks handed out to
/// `threads` workers. With one worker the chunks run in order on the caller.
template <class Fn>
void parallel_chunks(std::size_t count, unsigned threads, Fn&& fn, std::size_t chunk = 512) {
  if (count == 0) return;
  if (threads <= 1 || count <= chunk) {
    for (std::size_t b = 0; b < count; b += chunk) fn(b, std::min(count, b + chunk));
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t b = next.fetch_add(chunk);
      if (b >= count) return;
      fn(b, std::min(count, b + chunk));
    }
  };
  std::vector<std::thread> pool;
  const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>((count + chunk - 1) / chunk));
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

/// Lowers `target` to `value` if smaller.
inline void atomic_min(std::atomic<std::size_t>& target, std::size_t value) {
  std::size_t cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

}  // namespace skewminor::detail
