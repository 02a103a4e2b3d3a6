#pragma once

#include <cstddef>
#include <functional>

namespace coshspec {

// Worker count: hardware concurrency capped by the COSHSPEC_THREADS
// environment variable (>= 1).
unsigned worker_count();

// Runs fn(i) for i in [0, n).  Work is split into contiguous chunks, one
// per worker; results must be written to index-addressed storage so the
// outcome is independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace coshspec
