#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <span>
#include <thread>
#include <vector>

namespace landau {

/// Worker count: min(hardware, LANDAU_LAB_THREADS if set). At least 1.
std::size_t worker_count();

/// Deterministic pairwise (binary-tree) summation over the given order.
double pairwise_sum(std::span<const double> values);

/// Runs fn(chunk) for chunk = 0..n_chunks-1 on the worker pool and returns the
/// results indexed by chunk. The chunk decomposition is independent of the
/// worker count, so any reduction done in chunk order is bit-reproducible.
template <typename R, typename Fn>
std::vector<R> map_chunks(std::size_t n_chunks, Fn&& fn) {
    std::vector<R> results(n_chunks);
    const std::size_t workers = std::min(worker_count(), n_chunks);
    if (workers <= 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) results[c] = fn(c);
        return results;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::atomic<std::size_t> next{0};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&]() {
            for (;;) {
                const std::size_t c = next.fetch_add(1);
                if (c >= n_chunks) return;
                results[c] = fn(c);
            }
        });
    }
    for (auto& t : pool) t.join();
    return results;
}

}  // namespace landau
