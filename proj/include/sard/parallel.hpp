#pragma once

#include <cstddef>
#include <functional>

namespace sard {

/// Worker thread budget: min(hardware threads, SARD_THREADS) and at least 1.
/// SARD_THREADS is read once per process.
int thread_budget();

/// Runs fn(i) for every i in [0, n).  fn must be safe to call concurrently
/// for distinct i and should communicate results by index only, so the
/// outcome does not depend on scheduling.  Nested calls run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace sard
