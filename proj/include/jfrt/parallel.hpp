#pragma once

#include <cstddef>
#include <functional>

namespace jfrt {

/// Worker count: JFRT_THREADS if set and positive, else the hardware
/// concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for i in [0, count) on up to worker_count() threads.
/// Indices are handed out dynamically; the first exception thrown by any
/// body is rethrown after all workers have stopped.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace jfrt
