#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace cmpoly::detail {

inline constexpr std::uint64_t kSweepBlock = 256;

inline int resolve_workers(int requested) {
#ifdef _OPENMP
  return requested <= 0 ? omp_get_max_threads() : requested;
#else
  return 1;
#endif
}

// Reference loop. `visit(index, acc)` returns false to abort.
template <typename Acc, typename Visit>
Acc sweep_serial(std::uint64_t count, Visit&& visit) {
  Acc acc;
  for (std::uint64_t index = 0; index < count; ++index) {
    if (!visit(index, acc)) break;
  }
  return acc;
}

// Same contract, over fixed blocks of indices claimed dynamically by the
// worker threads. Each block owns its accumulator; blocks are merged in index
// order so the result does not depend on the schedule. After an abort,
// blocks not yet started are skipped.
template <typename Acc, typename Visit>
Acc sweep_parallel(std::uint64_t count, int workers, Visit&& visit) {
  const std::uint64_t blocks = (count + kSweepBlock - 1) / kSweepBlock;
  std::vector<Acc> partial(blocks);
  std::atomic<bool> stop{false};

#pragma omp parallel for schedule(dynamic) num_threads(resolve_workers(workers))
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    if (stop.load(std::memory_order_relaxed)) continue;
    const std::uint64_t begin = static_cast<std::uint64_t>(b) * kSweepBlock;
    const std::uint64_t end = std::min(count, begin + kSweepBlock);
    Acc& acc = partial[static_cast<std::size_t>(b)];
    for (std::uint64_t index = begin; index < end; ++index) {
      if (!visit(index, acc)) {
        stop.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }

  Acc out;
  for (Acc& acc : partial) {
    if (!out.merge(std::move(acc))) break;
  }
  return out;
}

}  // namespace cmpoly::detail
