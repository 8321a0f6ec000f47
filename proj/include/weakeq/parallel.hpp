#pragma once

#include <cstdint>
#include <functional>

namespace weakeq {

/// Worker-pool size used by parallelizable operations (cloud enumeration,
/// experiment trials). Work is split into fixed-size chunks whose boundaries
/// do not depend on the thread count, and chunk results are merged in chunk
/// order, so outputs are identical for any setting.
int worker_threads();
void set_worker_threads(int n);

/// Run fn(chunk_index, begin, end) over [0, total) in chunks of chunk_size.
/// Chunks are claimed dynamically by workers; fn must write only to
/// chunk-local storage indexed by chunk_index.
void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

inline std::uint64_t chunk_count(std::uint64_t total, std::uint64_t chunk_size) {
    return (total + chunk_size - 1) / chunk_size;
}

} // namespace weakeq
