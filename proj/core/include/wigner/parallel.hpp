#pragma once

#include <cstddef>
#include <functional>

namespace wigner {

/// Number of worker threads to use. Reads WIGNER_BGK_THREADS once; falls back
/// to std::thread::hardware_concurrency().
std::size_t thread_budget();

/// Runs fn(i) for i in [0, n), block-partitioned over the thread budget.
/// Falls through to a plain loop when n is small or the budget is 1.
/// fn must not throw across threads; exceptions are rethrown on the caller.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace wigner
