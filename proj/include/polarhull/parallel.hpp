#pragma once

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace polarhull {

// Worker cap taken from the POLARHULL_THREADS environment variable.
// Unset, empty, unparsable, 0 or 1 all mean sequential execution.
inline unsigned worker_count_from_env() {
  const char* raw = std::getenv("POLARHULL_THREADS");
  if (raw == nullptr || *raw == '\0') return 1;
  char* end = nullptr;
  const long value = std::strtol(raw, &end, 10);
  if (end == raw || value <= 1) return 1;
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned cap = hw == 0 ? 64u : hw;
  return static_cast<unsigned>(value) < cap ? static_cast<unsigned>(value) : cap;
}

// Applies fn(i) for i in [begin, end) on up to `workers` threads.  Chunks are
// contiguous and every index is processed exactly once, so any fn that writes
// only to slot i produces results identical to the sequential run.
inline void parallel_for(std::size_t begin, std::size_t end, unsigned workers,
                         const std::function<void(std::size_t)>& fn) {
  const std::size_t count = end > begin ? end - begin : 0;
  if (workers <= 1 || count < 2048) {
    for (std::size_t i = begin; i < end; ++i) fn(i);
    return;
  }
  const std::size_t chunk = (count + workers - 1) / workers;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = begin + static_cast<std::size_t>(w) * chunk;
    if (lo >= end) break;
    const std::size_t hi = lo + chunk < end ? lo + chunk : end;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace polarhull
