#pragma once

#include <cstddef>
#include <functional>

namespace cxbox {

// Number of worker threads: CXBOX_THREADS when set (clamped to >= 1),
// otherwise the hardware concurrency.
int worker_count();

// Runs fn(begin, end) over a partition of [0, n) on worker_count() threads.
// Deterministic: the partition depends only on n and the thread count, and
// workers write to disjoint ranges.
void parallel_for(std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace cxbox
