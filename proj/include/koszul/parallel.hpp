#ifndef KOSZUL_PARALLEL_HPP
#define KOSZUL_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace koszul {

/// Worker count: KOSZUL_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(0..count-1) over a pool of worker_count() threads. The first
/// exception thrown by any task is rethrown after all workers stop.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace koszul

#endif // KOSZUL_PARALLEL_HPP
