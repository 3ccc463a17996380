#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace repgas {

// Number of worker threads used by chunked reductions (default 1).
int worker_threads();
void set_worker_threads(int n);

// Deterministic parallel sum.  The index range [0, n) is cut into fixed-size
// chunks; `chunk_sum(begin, end)` produces the partial sum of one chunk, and
// the partials are accumulated in chunk order.  The result is bit-identical
// for any worker count, since neither the chunk boundaries nor the final
// accumulation order depend on scheduling.
//
// Nested calls (a chunk_sum that itself reduces) run serially inside the
// worker so the pool is not oversubscribed; determinism is unaffected.
inline constexpr std::size_t kReduceChunk = 8192;

using ChunkFn = std::function<std::complex<double>(std::size_t, std::size_t)>;
std::complex<double> chunked_sum(std::size_t n, const ChunkFn& chunk_sum);

}  // namespace repgas
