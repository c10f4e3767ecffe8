#pragma once

#include <cstddef>
#include <functional>

namespace circinterp {

/// Worker count: hardware concurrency capped by CIRCLE_INTERP_THREADS when set.
unsigned worker_count();

/// Calls body(i) for i in [0, count) split into contiguous chunks across
/// worker threads. body must not touch shared mutable state except its own
/// output slot.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace circinterp
