#pragma once

#include <cstddef>
#include <functional>

namespace tgraph {

// Worker cap shared by the scans; defaults to the hardware concurrency.
int max_threads();
void set_max_threads(int n);

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = max_threads()).
// The first exception thrown by any task is rethrown after all workers join.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn, int threads = 0);

}  // namespace tgraph
