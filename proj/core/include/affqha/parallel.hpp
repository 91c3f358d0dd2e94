#pragma once

#include <functional>

namespace affqha {

// Worker count: set_worker_count() wins, then AFFQHA_WORKERS, then 1.
int worker_count();
void set_worker_count(int workers);

// Calls body(i) for i in [0, n). Indices are split into contiguous chunks, one per
// worker; each index is processed by exactly one worker, so results that are
// written per index do not depend on the worker count.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace affqha
