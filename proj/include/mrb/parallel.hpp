// Copyright 2026 The mrb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MRB_PARALLEL_HPP
#define MRB_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mrb {

/// Number of worker threads to use by default.
inline uint32_t default_jobs() {
    const unsigned int hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<uint32_t>(hw);
}

/// Runs body(i) for i in [begin, end) on up to `jobs` threads. Iterations
/// must be independent; callers that need deterministic output should write
/// into index-addressed slots. The first exception thrown by any iteration is
/// rethrown on the calling thread.
inline void parallel_for(
    uint64_t begin,
    uint64_t end,
    uint32_t jobs,
    const std::function<void(uint64_t)>& body) {
    if (begin >= end) return;
    const uint64_t count = end - begin;
    if (jobs <= 1 || count == 1) {
        for (uint64_t i = begin; i < end; i++) body(i);
        return;
    }
    const uint32_t workers = static_cast<uint32_t>(std::min<uint64_t>(jobs, count));
    std::atomic<uint64_t> next(begin);
    std::atomic<bool> failed(false);
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (uint32_t w = 0; w < workers; w++) {
        threads.emplace_back([&]() {
            while (!failed.load(std::memory_order_relaxed)) {
                const uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
                if (i >= end) break;
                try {
                    body(i);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(error_mutex);
                    if (!error) error = std::current_exception();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        });
    }
    for (auto& t : threads) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace mrb

#endif
