#pragma once

#include <cstddef>
#include <functional>

namespace altes {

/// Worker count: ALTES_THREADS env var caps parallelism (0 or unset = auto).
unsigned worker_count();

/// Run fn(i) for i in [0, n). Results must be written to disjoint slots;
/// output ordering is by index, independent of scheduling.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace altes
