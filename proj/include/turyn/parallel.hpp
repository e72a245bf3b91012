#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <iterator>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace turyn {

inline constexpr const char* kThreadsEnvVar = "TURYN_THREADS";

/// Thread count from TURYN_THREADS, else the hardware concurrency.
inline std::size_t default_thread_count() {
    if (const char* env = std::getenv(kThreadsEnvVar)) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
    }
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Runs `work(i)` for every task index and concatenates the returned vectors in
/// task order, so the result does not depend on `threads` or on scheduling.
template <typename T, typename Work>
std::vector<T> ordered_parallel_collect(std::size_t tasks, std::size_t threads, Work&& work) {
    std::vector<std::vector<T>> parts(tasks);
    threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(tasks, 1));

    if (threads == 1) {
        for (std::size_t i = 0; i < tasks; ++i) parts[i] = work(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (std::size_t w = 0; w < threads; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < tasks;) {
                    try {
                        parts[i] = work(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) failure = std::current_exception();
                    }
                }
            });
        }
        for (auto& t : pool) t.join();
        if (failure) std::rethrow_exception(failure);
    }

    std::size_t total = 0;
    for (const auto& p : parts) total += p.size();
    std::vector<T> merged;
    merged.reserve(total);
    for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(merged));
    return merged;
}

}  // namespace turyn
