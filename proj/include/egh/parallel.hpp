#pragma once

#include <cstddef>
#include <functional>

namespace egh {

// Worker cap from EGH_THREADS, clamped to [1, hardware]. Defaults to the
// hardware count.
int worker_count();

// Runs fn(0..n-1) on up to worker_count() threads. Tasks must write only to
// index-owned slots; results are identical to the sequential run.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace egh
