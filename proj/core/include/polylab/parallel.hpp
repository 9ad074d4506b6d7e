#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace polylab {

/// Worker cap: OA_POLYLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Calls body(i) for i in [0, n) across up to worker_count() threads, using a
/// static contiguous partition. Calls made from inside a worker run serially.
/// After all workers join, the exception from the lowest-index chunk (if any)
/// is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace polylab
