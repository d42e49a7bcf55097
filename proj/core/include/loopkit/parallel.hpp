#pragma once

#include <functional>

namespace loopkit {

/// Global worker count for parallel_for; defaults to the hardware thread
/// count, clamped to at least 1.
void set_thread_count(int count);
int thread_count();

/// Runs fn(i) for i in [begin, end). Work is split into contiguous chunks,
/// one per worker; fn must only write to slots addressed by its own index, so
/// results are identical for every thread count.
void parallel_for(int begin, int end, const std::function<void(int)>& fn);

}  // namespace loopkit
