// parallel.hpp
//
// Chunked std::thread fan-out. Callers keep determinism by reducing
// per-chunk results in chunk order.

#ifndef APN_PARALLEL_HPP
#define APN_PARALLEL_HPP

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace apn {

// Requested thread count, falling back to APN_HORIZON_THREADS and then to
// hardware concurrency when requested == 0.
unsigned resolve_threads(unsigned requested);

// Split [0, total) into contiguous chunks and run fn(chunk, begin, end),
// one chunk per worker. chunk indexes are stable across thread counts of
// the same value; reductions in chunk order stay deterministic.
inline void parallel_chunks(std::uint64_t total, unsigned threads,
                            const std::function<void(unsigned, std::uint64_t, std::uint64_t)>& fn) {
    if (threads <= 1 || total < 2) {
        if (total > 0) fn(0, 0, total);
        return;
    }
    if (threads > total) threads = static_cast<unsigned>(total);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const std::uint64_t base = total / threads, rem = total % threads;
    std::uint64_t begin = 0;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t len = base + (t < rem ? 1 : 0);
        const std::uint64_t end = begin + len;
        pool.emplace_back([&, t, begin, end] { fn(t, begin, end); });
        begin = end;
    }
    for (auto& th : pool) th.join();
}

} // namespace apn

#endif
