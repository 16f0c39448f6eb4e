#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace onsager {

/// Worker count used by parallel loops. Initialized from ONSAGER_KIT_THREADS
/// (0 or unset = hardware concurrency).
unsigned thread_count();
void set_thread_count(unsigned n);

namespace detail {
inline thread_local bool in_worker = false;
}

/// out[i] = f(i) for i in [0, n), evaluated on up to thread_count() threads.
/// Results are stored by index, so the output does not depend on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t n, F&& f) {
    std::vector<T> out(n);
    unsigned workers = detail::in_worker ? 1u : static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            detail::in_worker = true;
            try {
                for (std::size_t i = next++; i < n; i = next++) out[i] = f(i);
            } catch (...) {
                errors[w] = std::current_exception();
                next = n;
            }
        });
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace onsager
