#include "repgas/threading.hpp"

#include <atomic>
#include <thread>

namespace repgas {

namespace {
std::atomic<int> g_workers{1};
thread_local bool t_inside_worker = false;
}  // namespace

int worker_threads() { return g_workers.load(std::memory_order_relaxed); }

void set_worker_threads(int n) {
  g_workers.store(n < 1 ? 1 : n, std::memory_order_relaxed);
}

std::complex<double> chunked_sum(std::size_t n, const ChunkFn& chunk_sum) {
  if (n == 0) return {0.0, 0.0};
  const std::size_t nchunks = (n + kReduceChunk - 1) / kReduceChunk;
  std::vector<std::complex<double>> partial(nchunks);

  const int workers = t_inside_worker ? 1 : worker_threads();
  if (workers <= 1 || nchunks == 1) {
    for (std::size_t c = 0; c < nchunks; ++c) {
      const std::size_t b = c * kReduceChunk;
      partial[c] = chunk_sum(b, std::min(n, b + kReduceChunk));
    }
  } else {
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      t_inside_worker = true;
      for (;;) {
        const std::size_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= nchunks) break;
        const std::size_t b = c * kReduceChunk;
        partial[c] = chunk_sum(b, std::min(n, b + kReduceChunk));
      }
      t_inside_worker = false;
    };
    std::vector<std::thread> pool;
    const std::size_t nthreads =
        std::min<std::size_t>(static_cast<std::size_t>(workers), nchunks);
    pool.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }

  // Chunk partials are summed in ascending chunk order, never in completion
  // order; this is what makes the reduction reproducible across thread counts.
  std::complex<double> total{0.0, 0.0};
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace repgas
