#include "seqspace/utils.hpp"

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>

namespace seqspace {

unsigned worker_threads() {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    const char* env = std::getenv("SEQSPACE_THREADS");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && cap >= 1 && cap < 1024) {
            if (static_cast<unsigned>(cap) < hw) hw = static_cast<unsigned>(cap);
        }
    }
    return hw;
}

void parallel_for(std::int64_t n, const std::function<void(std::int64_t)>& fn) {
    if (n <= 0) return;
    unsigned workers = worker_threads();
    if (workers <= 1 || n < 4096) {
        for (std::int64_t i = 0; i < n; ++i) fn(i);
        return;
    }
    if (static_cast<std::int64_t>(workers) > n) workers = static_cast<unsigned>(n);
    std::atomic<std::int64_t> next{0};
    const std::int64_t chunk = 1024;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                std::int64_t lo = next.fetch_add(chunk);
                if (lo >= n) return;
                std::int64_t hi = lo + chunk < n ? lo + chunk : n;
                for (std::int64_t i = lo; i < hi; ++i) fn(i);
            }
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace seqspace
