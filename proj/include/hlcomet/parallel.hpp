#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hlc {

struct ScanOptions {
  std::uint64_t chunk_size = 65536;
  unsigned threads = 0;  // 0: std::thread::hardware_concurrency()
};

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Split [lo, hi] into chunks, run `work(chunk_lo, chunk_hi)` on a worker
/// pool and return the per-chunk results in ascending chunk order. The first
/// exception thrown by any worker is rethrown after all workers join.
template <typename Work>
auto map_chunks(std::uint64_t lo, std::uint64_t hi, const ScanOptions& opts, Work&& work)
    -> std::vector<decltype(work(lo, hi))> {
  using Result = decltype(work(lo, hi));
  if (hi < lo) return {};
  const std::uint64_t chunk = std::max<std::uint64_t>(1, opts.chunk_size);
  const std::uint64_t chunks = (hi - lo) / chunk + 1;
  std::vector<Result> results(chunks);

  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i = next++; i < chunks; i = next++) {
      const std::uint64_t a = lo + i * chunk;
      const std::uint64_t b = std::min(hi, a + chunk - 1);
      try {
        results[i] = work(a, b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
      }
    }
  };

  const unsigned n_threads =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(opts.threads), chunks));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace hlc
