#pragma once

// Internal plumbing shared by the search modules: cooperative deadlines,
// worker partitioning, flat int64 helpers. Not installed.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <thread>
#include <vector>

#include "baut/errors.hpp"
#include "baut/isometry.hpp"

namespace baut::detail {

class CancelToken {
public:
    explicit CancelToken(const std::optional<std::chrono::steady_clock::time_point>& deadline)
        : deadline_(deadline) {}

    bool expired() const { return expired_.load(std::memory_order_relaxed); }

    // Cheap per-node poll; the clock is only consulted every few thousand
    // calls per worker.
    bool poll(unsigned& local_counter) {
        if (expired()) return true;
        if (deadline_ && (++local_counter & 0x0fffu) == 0 &&
            std::chrono::steady_clock::now() >= *deadline_) {
            expired_.store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    void throw_if_expired(const char* what) const {
        if (expired()) throw timeout_error(what);
    }

private:
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<bool> expired_{false};
};

inline unsigned resolve_threads(unsigned requested) {
    if (requested > 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

// Runs fn(worker_id) on `threads` workers; work items are claimed through a
// shared atomic counter by the callee. Rethrows the first worker exception.
inline void run_workers(unsigned threads, const std::function<void(unsigned)>& fn) {
    if (threads <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                fn(t);
            } catch (...) {
                errs[t] = std::current_exception();
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errs)
        if (e) std::rethrow_exception(e);
}

// Sorts a flat sequence of fixed-size blocks lexicographically, in place.
template <typename T>
void sort_flat_blocks(std::vector<T>& flat, std::size_t block) {
    if (block == 0 || flat.size() <= block) return;
    const std::size_t n = flat.size() / block;
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const T* pa = flat.data() + a * block;
        const T* pb = flat.data() + b * block;
        return std::lexicographical_compare(pa, pa + block, pb, pb + block);
    });
    std::vector<T> out(flat.size());
    for (std::size_t i = 0; i < n; ++i)
        std::copy_n(flat.data() + idx[i] * block, block, out.data() + i * block);
    flat.swap(out);
}

template <typename T>
bool flat_blocks_contain(const std::vector<T>& flat, std::size_t block, const T* key) {
    const std::size_t n = block ? flat.size() / block : 0;
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const T* p = flat.data() + mid * block;
        if (std::lexicographical_compare(p, p + block, key, key + block))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo == n) return false;
    const T* p = flat.data() + lo * block;
    return std::equal(p, p + block, key);
}

template <typename T>
std::size_t flat_blocks_index_of(const std::vector<T>& flat, std::size_t block, const T* key) {
    const std::size_t n = block ? flat.size() / block : 0;
    std::size_t lo = 0, hi = n;
    while (lo < hi) {
        const std::size_t mid = (lo + hi) / 2;
        const T* p = flat.data() + mid * block;
        if (std::lexicographical_compare(p, p + block, key, key + block))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo; // caller checks equality / bounds
}

} // namespace baut::detail
