#pragma once

#include <cstddef>
#include <functional>

namespace catlab {

// Worker count: explicit > 0 wins, otherwise CATLAB_THREADS (0 = auto),
// otherwise hardware concurrency.
int worker_count(int requested = 0);

// Runs fn(i) for i in [0, n) across workers. fn must be pure per-index;
// callers own deterministic merging of results (sort by index, not by
// completion time).
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn,
                  int requested_threads = 0);

}  // namespace catlab
