#pragma once

#include <cstddef>
#include <functional>

namespace paircorr {

// Worker cap: PAIRCORR_THREADS if set to a positive integer, otherwise the
// hardware concurrency (at least 1).
unsigned worker_count();

// Calls body(i) for every i in [0, n), split into contiguous chunks over at
// most worker_count() threads. body must only write to slot i of its output,
// so results do not depend on the number of workers. The first exception
// thrown by any worker is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &body);

} // namespace paircorr
