#pragma once

// Internal work-sharing helper. Results must be written to disjoint,
// preallocated slots so the outcome is identical at any parallelism degree.

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace roughstat::detail {

inline int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("ROUGH_STAT_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
}

inline void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (count == 0) return;
    int workers = worker_count();
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    int spawn = std::min<int>(workers, static_cast<int>(count));
    pool.reserve(static_cast<std::size_t>(spawn - 1));
    for (int t = 1; t < spawn; ++t) pool.emplace_back(run);
    run();
    for (auto& th : pool) th.join();
}

} // namespace roughstat::detail
