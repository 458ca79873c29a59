#pragma once

#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace starprod {

// 0 means "use available parallelism"; STARPROD_THREADS is honoured by the CLI,
// not here.
unsigned resolve_threads(unsigned requested) noexcept;

// Splits [0, total) into one contiguous block per worker and runs
// fn(worker, begin, end) on each. The partition depends only on (total,
// workers), so callers that merge per-worker results in worker order get
// identical output for any scheduling. Exceptions from workers are rethrown.
template <class Fn>
void parallel_blocks(std::uint64_t total, unsigned workers, Fn&& fn) {
  if (workers == 0) workers = 1;
  if (total < workers) workers = total == 0 ? 1 : static_cast<unsigned>(total);
  if (workers == 1) {
    fn(0u, std::uint64_t{0}, total);
    return;
  }
  std::vector<std::thread> pool;
  std::exception_ptr first_error;
  std::mutex error_mu;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace starprod
