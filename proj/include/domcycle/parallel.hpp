#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace domcycle {

// Runs fn(i) for i in [0, count) across up to `threads` workers. Callers
// write results into slot i only, so output is identical for any thread
// count. fn must not throw.
inline void parallel_for(std::size_t count, int threads,
                         const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) return;
            fn(i);
        }
    };
    int use = threads;
    if (static_cast<std::size_t>(use) > count) use = static_cast<int>(count);
    std::vector<std::thread> pool;
    pool.reserve(use);
    for (int t = 0; t < use; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

}  // namespace domcycle
