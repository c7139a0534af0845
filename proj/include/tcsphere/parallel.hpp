#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace tcsphere {

/// Worker count: hardware concurrency, capped by TC_SPHERE_THREADS when set.
inline unsigned thread_budget() {
    unsigned n = std::max(1U, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TC_SPHERE_THREADS")) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) n = std::min(n, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            // ignore malformed values
        }
    }
    return n;
}

/// Runs body(i) for i in [0, count) over contiguous blocks, one per worker.
/// The first exception thrown by any worker is rethrown.
template <typename Body>
void parallel_for(std::size_t count, Body&& body) {
    const std::size_t workers = std::min<std::size_t>(thread_budget(), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    const std::size_t block = (count + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            try {
                const std::size_t end = std::min(count, (w + 1) * block);
                for (std::size_t i = w * block; i < end; ++i) body(i);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace tcsphere
