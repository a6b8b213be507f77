// Chunked parallel execution for pair counting. Every reduction in this code
// base merges integer counts or fills disjoint slots, so results are
// identical for any worker count. CONCORD_THREADS caps the pool.

#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace concord {

// Workers used for parallel loops: min(hardware, CONCORD_THREADS), at least 1.
std::size_t worker_count();

// Programmatic cap taking precedence over CONCORD_THREADS; 0 removes it.
// Estimates must be identical under any cap.
void set_worker_override(std::size_t workers);

// Invokes fn(begin, end) on disjoint chunks of [0, n), possibly concurrently.
// fn must only write to state owned by its chunk. Exceptions propagate.
void parallel_for_chunks(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

// Maps fn over disjoint chunks of [0, n) and merges the partial results in
// chunk order, so the reduction is deterministic whenever merge is
// associative (integer tallies are; that is all we merge).
template <typename T, typename Fn, typename Merge>
T parallel_reduce(std::size_t n, T init, Fn&& fn, Merge&& merge) {
    if (n == 0) return init;
    const std::size_t workers = std::min(worker_count(), n);
    const std::size_t chunk = (n + workers - 1) / workers;

    std::vector<T> partial;
    std::vector<std::thread> threads;
    std::exception_ptr first_error;
    std::mutex error_mutex;

    for (std::size_t begin = 0; begin < n; begin += chunk) partial.emplace_back(init);
    std::size_t slot = 0;
    for (std::size_t begin = 0; begin < n; begin += chunk, ++slot) {
        const std::size_t end = std::min(n, begin + chunk);
        if (workers <= 1) {
            partial[slot] = fn(begin, end);
            continue;
        }
        threads.emplace_back([&, begin, end, slot] {
            try {
                partial[slot] = fn(begin, end);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    if (first_error) std::rethrow_exception(first_error);

    T total = std::move(init);
    for (auto& p : partial) total = merge(std::move(total), std::move(p));
    return total;
}

}  // namespace concord
