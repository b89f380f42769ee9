#pragma once

#include <cstddef>
#include <functional>

namespace starcount {

// Number of hardware threads, at least 1.
int hardware_workers();

// Runs fn(i) for i in [0, count) on up to `workers` threads. Indices are handed
// out through a shared counter; the caller is responsible for writing results
// into per-index slots. If several calls throw, the exception of the lowest
// index is rethrown after all threads join.
void parallel_for(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace starcount
