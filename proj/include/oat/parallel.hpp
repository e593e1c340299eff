#pragma once

#include <cstddef>
#include <functional>

namespace oat {

// Process-wide worker count for verification loops (1 = sequential).
void set_parallelism(int n);
int parallelism();

// Runs fn(i) for i in [0, n).  Work is partitioned by index, so each slot of
// a pre-sized result vector is written by exactly one worker and the caller
// can assemble results in index order regardless of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace oat
