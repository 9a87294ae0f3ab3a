#pragma once

#include <cstddef>
#include <algorithm>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace frustra {

// Worker count: FRUSTRA_THREADS if set to a positive integer, else hardware concurrency.
inline unsigned thread_budget() {
    if (const char* env = std::getenv("FRUSTRA_THREADS")) {
        char* end = nullptr;
        const long n = std::strtol(env, &end, 10);
        if (end != env && n > 0)
            return static_cast<unsigned>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

// out[i] = fn(i) for i in [0, n). Results land in index order regardless of
// scheduling; the first exception (lowest index) is rethrown.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    const std::size_t workers = std::min<std::size_t>(thread_budget(), n);
    auto run = [&](std::size_t w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers <= 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back(run, w);
        for (auto& t : pool)
            t.join();
    }
    for (auto& e : errors)
        if (e)
            std::rethrow_exception(e);
    return out;
}

} // namespace frustra
