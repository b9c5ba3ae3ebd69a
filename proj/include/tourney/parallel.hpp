#pragma once

#include <cstddef>
#include <functional>

namespace tourney {

/// Worker count: hardware concurrency, capped by TOURNEY_CODES_THREADS when set.
std::size_t worker_count();

/// Calls body(worker, begin, end) on disjoint chunks covering [0, count).
/// Blocks until every chunk is done; rethrows the first exception raised.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace tourney
