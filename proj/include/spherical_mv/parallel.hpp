/*
 * Copyright 2026 The spherical_mv Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *  http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file parallel.hpp
 * @brief Deterministic index-parallel map used by grid sweeps.
 *
 * Every index writes only its own output slot, so results do not depend on
 * the thread count. The number of worker threads is capped by the
 * SPHERICAL_MV_THREADS environment variable.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace spherical_mv {

/// Worker count: SPHERICAL_MV_THREADS if set and positive, else hardware concurrency.
inline unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("SPHERICAL_MV_THREADS")) {
        int v = std::atoi(env);
        if (v > 0) return std::min(hw, static_cast<unsigned>(v));
    }
    return hw;
}

/// Evaluates fn(i) for i in [0, n) and returns the results in index order.
/// If any call throws, the exception of the smallest failing index is rethrown.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    unsigned workers = std::min<std::size_t>(worker_count(), std::max<std::size_t>(n, 1));
    auto run = [&](std::size_t i) {
        try {
            out[i] = fn(i);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) run(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) run(i);
            });
        }
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace spherical_mv
