#include "weakeq/parallel.hpp"

#include <atomic>
#include <thread>
#include <vector>

namespace weakeq {

namespace {
std::atomic<int> g_workers{1};
}

int worker_threads() { return g_workers.load(); }

void set_worker_threads(int n) { g_workers.store(n < 1 ? 1 : n); }

void parallel_chunks(std::uint64_t total, std::uint64_t chunk_size,
                     const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
    if (total == 0) return;
    const std::uint64_t chunks = chunk_count(total, chunk_size);
    const int workers = std::min<std::uint64_t>(g_workers.load(), chunks);

    if (workers <= 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            const std::uint64_t begin = c * chunk_size;
            fn(static_cast<std::size_t>(c), begin, std::min(begin + chunk_size, total));
        }
        return;
    }

    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::uint64_t c = next.fetch_add(1);
            if (c >= chunks) return;
            const std::uint64_t begin = c * chunk_size;
            fn(static_cast<std::size_t>(c), begin, std::min(begin + chunk_size, total));
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

} // namespace weakeq
