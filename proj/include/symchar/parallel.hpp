#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace symchar {

inline int resolve_threads(int threads) {
    if (threads > 0)
        return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Run fn(i) for i in [0, n); work items must write to disjoint state.
inline void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
    int nthreads = resolve_threads(threads);
    if (nthreads <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::size_t workers = std::min<std::size_t>(nthreads, n);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
}

}  // namespace symchar
