#pragma once

#include <cstddef>
#include <functional>

namespace fractal {

/// Worker count: FRACTAL_THREADS when it holds a positive integer, otherwise
/// the hardware concurrency (at least 1).
int worker_count();

/// Runs task(i) for every i in [0, count) on up to worker_count() threads.
/// Tasks must write only to their own output slot; callers merge in index
/// order, which keeps results independent of scheduling. The first exception
/// thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

}  // namespace fractal
