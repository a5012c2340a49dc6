#pragma once

#include <cstddef>
#include <functional>

namespace hgl {

/// Worker count: HGL_THREADS if set to a positive integer, else hardware concurrency.
unsigned worker_count();

/// Calls body(i) for i in [0, n), split into contiguous blocks across
/// worker_count() threads. body must only write to state owned by index i.
/// Exceptions from workers are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace hgl
