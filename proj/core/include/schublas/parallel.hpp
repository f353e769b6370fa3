#pragma once

#include <cstddef>
#include <functional>

namespace schublas {

/// Worker count: SCHUBLAS_THREADS when set and positive, else
/// limits::threads() when positive, else hardware_concurrency.
unsigned worker_count();

/// Runs fn(i) for i in [0, count) on worker_count() threads. Static block
/// partition, so writes to per-index slots are deterministic and race free.
/// The first exception thrown is rethrown on the caller after all threads
/// join. Runs inline when count is small or a single worker is configured.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace schublas
