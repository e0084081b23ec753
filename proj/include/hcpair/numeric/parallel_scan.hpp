#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hcpair::numeric {

// Worker count for parameter scans: hardware concurrency clipped to the job
// count, optionally capped by the HCPAIR_MAX_WORKERS environment variable.
// Returns at least 1.
inline int scan_worker_count(std::size_t jobs) {
    int workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;
    if (const char* cap = std::getenv("HCPAIR_MAX_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(cap, &end, 10);
        if (end != cap && *end == '\0' && v >= 1 && v < 1024)
            workers = std::min<long>(workers, v);
    }
    return static_cast<int>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs, 1)));
}

// Applies fn to every input on a small worker pool and returns results in
// input order. fn must be safe to call concurrently; the first exception
// thrown is rethrown on the calling thread.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& inputs, Fn&& fn)
    -> std::vector<decltype(fn(inputs.front()))> {
    using Out = decltype(fn(inputs.front()));
    std::vector<Out> results(inputs.size());
    if (inputs.empty()) return results;

    const int workers = scan_worker_count(inputs.size());
    if (workers == 1) {
        for (std::size_t i = 0; i < inputs.size(); ++i) results[i] = fn(inputs[i]);
        return results;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= inputs.size() || failed.load()) return;
                try {
                    results[i] = fn(inputs[i]);
                } catch (...) {
                    std::scoped_lock lock(error_mutex);
                    if (!failed.exchange(true)) error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failed.load()) std::rethrow_exception(error);
    return results;
}

}  // namespace hcpair::numeric
