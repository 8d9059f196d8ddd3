#pragma once

#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace dimkit {

/// Thread budget: DIMKIT_THREADS when set (>=1), else hardware concurrency.
inline int num_threads() {
    if (const char* env = std::getenv("DIMKIT_THREADS")) {
        int v = std::atoi(env);
        if (v >= 1) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : int(hc);
}

/// Runs fn(i) for i in [begin, end) across the thread budget. Each index is
/// handled exactly once; fn must write to disjoint state per index.
template <typename Fn>
void parallel_for(long begin, long end, Fn&& fn, int threads = num_threads()) {
    const long count = end - begin;
    if (count <= 0) return;
    if (threads <= 1 || count == 1) {
        for (long i = begin; i < end; ++i) fn(i);
        return;
    }
    if (threads > count) threads = int(count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        long lo = begin + t * chunk;
        long hi = std::min(end, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([lo, hi, &fn] {
            for (long i = lo; i < hi; ++i) fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace dimkit
