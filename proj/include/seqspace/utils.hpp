#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace seqspace {

/// Thread count used for element-wise work: min(hardware, SEQSPACE_THREADS).
/// Unset, empty or invalid SEQSPACE_THREADS means "no cap".
unsigned worker_threads();

/// Runs fn(i) for i in [0, n). Each index owns its output slot, so results
/// are deterministic regardless of the thread count. Falls back to a plain
/// loop for small n or a single worker.
void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn);

}  // namespace seqspace
