#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace hosoya {

/// Worker count for row-parallel scans; HOSOYA_THREADS overrides.
inline unsigned worker_count() {
    if (const char* env = std::getenv("HOSOYA_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? hc : 1;
}

/// fn(i) for i in [begin, end), claimed dynamically so uneven rows
/// balance. fn must be safe to run concurrently and must not throw.
template <typename Fn>
void parallel_for(long long begin, long long end, Fn&& fn) {
    const long long total = end - begin;
    unsigned workers = worker_count();
    if (total <= 1 || workers <= 1) {
        for (long long i = begin; i < end; ++i) fn(i);
        return;
    }
    if (workers > static_cast<unsigned>(total))
        workers = static_cast<unsigned>(total);
    std::atomic<long long> next{begin};
    auto run = [&] {
        for (;;) {
            long long i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= end) break;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers - 1);
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

}  // namespace hosoya
