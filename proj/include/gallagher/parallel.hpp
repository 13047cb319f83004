#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

namespace gallagher {

/// Thread budget for OpenMP regions: GALLAGHER_LAB_THREADS when set, else the
/// OpenMP default. set_thread_cap overrides both (0 restores the default).
int thread_cap();
void set_thread_cap(int threads);

/// Runs body(i) for i in [0, n) on the OpenMP team. Each index is handled by
/// exactly one thread; the first exception thrown by any body is rethrown.
template <class Body>
void parallel_for(std::size_t n, Body&& body) {
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static) num_threads(thread_cap())
    for (long long i = 0; i < count; ++i) {
        try {
            body(static_cast<std::size_t>(i));
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
}

}  // namespace gallagher
