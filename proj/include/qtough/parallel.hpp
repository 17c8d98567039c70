#pragma once

#include <cstddef>
#include <functional>

namespace qtough {

/// Worker count: Q_TOUGH_THREADS if set (clamped to >= 1), otherwise the
/// hardware concurrency.
int thread_budget();

/// Runs fn(0..count-1) across the thread budget. Tasks must be independent;
/// callers keep determinism by writing each result into its own slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace qtough
