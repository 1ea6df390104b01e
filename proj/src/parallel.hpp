#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <utility>
#include <vector>

namespace supereuler::detail {

// Runs fn(i) for every i in [0, count), distributing indices across a pool of
// worker threads. With workers <= 1 the loop runs inline on the calling
// thread. Results must be written to pre-sized per-index slots by the caller
// so that output order never depends on the worker count. The first exception
// thrown by any worker is rethrown on the calling thread after all workers
// have joined.
template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) {
        return;
    }
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto run = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
            if (i >= count) {
                return;
            }
            try {
                fn(i);
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                return;
            }
        }
    };

    std::size_t pool = std::min<std::size_t>(static_cast<std::size_t>(workers), count);
    std::vector<std::thread> threads;
    threads.reserve(pool);
    for (std::size_t t = 0; t < pool; ++t) {
        threads.emplace_back(run);
    }
    for (auto& th : threads) {
        th.join();
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

}  // namespace supereuler::detail
