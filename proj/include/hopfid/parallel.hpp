#pragma once

#include <cstddef>
#include <functional>

namespace hopfid {

// Worker count used by parallel_for: n >= 1 forces n threads, n <= 0 restores
// the OpenMP default. Returns the count in effect.
void set_threads(int n);
int thread_count();

// Runs body(0..n-1) on the configured threads when built with OpenMP, serially
// otherwise. Bodies must write only to their own output slot; the first
// exception thrown by any iteration is rethrown after the loop.
void parallel_for(size_t n, const std::function<void(size_t)>& body);

}  // namespace hopfid
