#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace flagsphere {

inline int default_jobs() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

/// fn(i) for i in [0, count), spread over up to `jobs` threads. Results land
/// at their own index, so the output is deterministic regardless of thread
/// timing. The first captured exception is rethrown after all workers join.
template <class T, class Fn>
std::vector<T> parallel_map(int count, int jobs, Fn&& fn) {
    std::vector<T> out(count);
    if (count <= 0) return out;
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) out[i] = fn(i);
        return out;
    }
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> pool;
    pool.reserve(jobs);
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int i = next.fetch_add(1); i < count;
                     i = next.fetch_add(1))
                    out[i] = fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace flagsphere
