#pragma once

#include <cstddef>
#include <functional>

namespace moykit {

/// 0 means "use the hardware concurrency"; result is at least 1.
int effective_threads(int requested);

/// Runs fn(i, worker) for i in [0, n) on up to `threads` workers. Exceptions
/// thrown by fn are rethrown on the calling thread (first one wins).
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t, int)>& fn);

}  // namespace moykit
