#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace hookdist {

/// Thread count from --threads / HOOKDIST_THREADS style settings; 0 means
/// "number of logical processors".
unsigned resolve_threads(unsigned requested);

/// Calls fn(i) for every i in [0, count). Index i goes to worker i % threads,
/// so the assignment of work is a pure function of (count, threads).
template <class Fn>
void parallel_stripes(std::size_t count, unsigned threads, Fn&& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&fn, count, workers, w] {
            for (std::size_t i = w; i < count; i += workers) {
                fn(i);
            }
        });
    }
}

}  // namespace hookdist
