#pragma once

#include <cstddef>
#include <functional>

namespace gafzeros {

// Worker count: GAFZEROS_THREADS if set to a positive integer, otherwise
// std::thread::hardware_concurrency(), at least 1.
int thread_count();

// Runs fn(i) for i in [0, total) across thread_count() workers. Each index is
// claimed exactly once; determinism is up to the callee (write to slot i, no
// cross-index accumulation). Exceptions propagate; the first one thrown wins.
void parallel_for(std::size_t total, const std::function<void(std::size_t)>& fn);

}  // namespace gafzeros
