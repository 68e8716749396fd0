#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace eisen {

// Resolves a requested worker count; 0 means one per hardware thread.
inline unsigned resolve_jobs(unsigned jobs) {
    if (jobs > 0) return jobs;
    return std::max(1u, std::thread::hardware_concurrency());
}

// Calls fn(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by any task is rethrown after all workers finish.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn) {
    jobs = std::min<unsigned>(resolve_jobs(jobs), static_cast<unsigned>(std::max<std::size_t>(n, 1)));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr err;
    std::mutex err_mu;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mu);
                if (!err) err = std::current_exception();
                next = n;
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace eisen
