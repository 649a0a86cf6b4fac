#pragma once

#include <cstddef>
#include <functional>

namespace levyld {

/// Number of workers for a requested count; 0 means hardware concurrency.
int resolve_threads(int requested);

/// Runs task(i) for i in [0, count) on `threads` workers. Tasks are claimed
/// dynamically; the first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& task);

}  // namespace levyld
