#pragma once

#include <cstddef>
#include <functional>

namespace gelfand {

// Upper bound on worker threads used by the counting kernels (default 1).
void set_thread_count(int n);
int thread_count();

// Calls body(i) for i in [0, n).  Iterations must write disjoint outputs;
// results are then independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gelfand
