#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace cartanlift {

// Worker count comes from the CARTANLIFT_THREADS environment variable only.
inline unsigned worker_count() {
    if (const char* env = std::getenv("CARTANLIFT_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

/* Runs fn(0..count-1); results must be written to preallocated slots so that
   reduction order stays deterministic. */
template <class Fn>
void parallel_for(size_t count, Fn&& fn) {
    size_t workers = std::min<size_t>(worker_count(), count);
    if (workers <= 1) {
        for (size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace cartanlift
