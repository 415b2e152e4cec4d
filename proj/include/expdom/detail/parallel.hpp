#pragma once

#include <algorithm>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace expdom::detail {

/// Runs body(worker) for worker in [0, workers) on separate threads and
/// rethrows the first exception. workers <= 1 runs inline.
template <class Body>
void run_workers(int workers, Body body)
{
    workers = std::max(workers, 1);
    if (workers == 1) {
        body(0);
        return;
    }
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                body(w);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        });
    }
    for (auto& t : threads)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

} // namespace expdom::detail
