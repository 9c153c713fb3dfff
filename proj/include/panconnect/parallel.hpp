#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace panconnect
{
    /// Runs body(i) for i in [0, count) on up to `jobs` threads. Indices are handed out
    /// dynamically, so callers must write results by index to stay order-independent.
    /// The first exception thrown by any body is rethrown after all threads join.
    template <typename Body>
    auto parallel_for(std::size_t count, unsigned jobs, Body && body) -> void
    {
        jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(std::min<std::size_t>(count, 1024))));
        if (jobs <= 1) {
            for (std::size_t i = 0; i < count; ++i)
                body(i);
            return;
        }

        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < count;) {
                try {
                    body(i);
                }
                catch (...) {
                    std::lock_guard lock{failure_mutex};
                    if (! failure)
                        failure = std::current_exception();
                    next.store(count);
                }
            }
        };
        std::vector<std::thread> threads;
        threads.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t)
            threads.emplace_back(worker);
        for (auto & t : threads)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}
