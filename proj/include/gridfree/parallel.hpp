#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace gridfree {

/// Splits [0, n) into contiguous chunks and runs fn(begin, end, chunk_index)
/// on up to `threads` workers. Chunk boundaries depend only on n and the
/// chunk count, so per-chunk results can be merged deterministically.
template <typename Fn>
void parallel_chunks(std::size_t n, int threads, std::size_t n_chunks, Fn&& fn) {
    if (n == 0) return;
    if (n_chunks == 0 || n_chunks > n) n_chunks = n;
    if (threads < 1) threads = 1;

    auto chunk_bounds = [&](std::size_t c) {
        std::size_t lo = n * c / n_chunks;
        std::size_t hi = n * (c + 1) / n_chunks;
        return std::pair<std::size_t, std::size_t>{lo, hi};
    };

    if (threads == 1 || n_chunks == 1) {
        for (std::size_t c = 0; c < n_chunks; ++c) {
            auto [lo, hi] = chunk_bounds(c);
            fn(lo, hi, c);
        }
        return;
    }

    std::vector<std::thread> workers;
    std::size_t per = (n_chunks + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        std::size_t first = per * static_cast<std::size_t>(t);
        std::size_t last = std::min(n_chunks, first + per);
        if (first >= last) break;
        workers.emplace_back([&, first, last] {
            for (std::size_t c = first; c < last; ++c) {
                auto [lo, hi] = chunk_bounds(c);
                fn(lo, hi, c);
            }
        });
    }
    for (auto& w : workers) w.join();
}

/// Default thread count: the GRIDFREE_THREADS environment variable if set,
/// otherwise 1.
int default_thread_count();

}  // namespace gridfree
