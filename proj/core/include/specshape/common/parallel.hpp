#pragma once

#include <cstddef>
#include <functional>

namespace specshape {

/// Resolve an effective worker count: `requested` <= 0 means "use all
/// hardware threads", and the SPECSHAPE_THREADS environment variable, when
/// set, caps the result. Always returns at least 1.
int resolve_thread_count(int requested);

/// Run fn(i) for i in [begin, end) split across `threads` workers in fixed
/// contiguous blocks. Results must be written to disjoint per-index slots so
/// the output is identical for every thread count. threads <= 1 runs inline.
void parallel_for(std::size_t begin, std::size_t end, int threads,
                  const std::function<void(std::size_t)>& fn);

}  // namespace specshape
