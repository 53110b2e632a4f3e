/*
 *   Copyright 2026 The trustlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef TRUSTLAB_PARALLEL_HPP
#define TRUSTLAB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace trustlab {

/// Runs body(row, worker) for every row in [0, rows) on up to `workers`
/// threads. Rows are handed out dynamically; callers keep results
/// deterministic by writing only to row-owned state and using the worker
/// index for scratch space. The first exception thrown is rethrown here.
template <class Body>
void parallel_rows(std::size_t rows, std::size_t workers, Body&& body) {
    workers = std::max<std::size_t>(1, std::min(workers, rows));
    if (workers == 1) {
        for (std::size_t r = 0; r < rows; ++r) body(r, std::size_t{0});
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t r = next++; r < rows; r = next++) body(r, w);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                    next = rows;
                }
            });
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace trustlab

#endif  // TRUSTLAB_PARALLEL_HPP
