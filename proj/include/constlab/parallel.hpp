/*
 * Copyright 2026 The constlab Authors
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

#ifndef CONSTLAB_PARALLEL_HPP
#define CONSTLAB_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace constlab {

/// Worker count: explicit request > CONSTLAB_THREADS > hardware concurrency.
inline unsigned resolve_threads(unsigned requested = 0)
{
    if (requested > 0)
        return requested;
    if (const char* env = std::getenv("CONSTLAB_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0)
            return static_cast<unsigned>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

/// Runs body(i) for i in [0, count). Each index owns its output slot, so
/// results are identical for every worker count.
template <class Body>
void parallel_for(std::size_t count, const Body& body, unsigned threads = 0)
{
    const unsigned workers = std::min<std::size_t>(resolve_threads(threads), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                body(i);
        });
    }
    for (auto& t : pool)
        t.join();
}

} // namespace constlab

#endif
