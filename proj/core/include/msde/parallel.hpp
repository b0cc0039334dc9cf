#pragma once

#include <functional>

namespace msde {

// Runs fn(0) .. fn(n-1) across `threads` workers (0 = hardware concurrency).
// Tasks are claimed from a shared atomic index; fn must be safe to call
// concurrently for distinct indices.
void parallel_for(long n, int threads, const std::function<void(long)>& fn);

}  // namespace msde
