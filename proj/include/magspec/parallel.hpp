#pragma once

#include <functional>

namespace magspec {

// Worker count: explicit request, else MAGSPEC_THREADS, else hardware threads.
int worker_count(int requested = 0);

// Calls body(i) for i in [0, count) on up to `workers` threads. Work is split
// in contiguous blocks; the first exception is rethrown after joining.
void parallel_for(int count, int workers, const std::function<void(int)>& body);

}  // namespace magspec
