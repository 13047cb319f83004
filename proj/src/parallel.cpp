#include "gallagher/parallel.hpp"

#include <omp.h>

#include <atomic>
#include <cstdlib>
#include <string>

namespace gallagher {

namespace {

std::atomic<int> override_cap{0};

int env_cap() {
    static const int cap = [] {
        const char* raw = std::getenv("GALLAGHER_LAB_THREADS");
        if (!raw) return 0;
        try {
            return std::max(0, std::stoi(raw));
        } catch (...) {
            return 0;
        }
    }();
    return cap;
}

}  // namespace

int thread_cap() {
    if (int o = override_cap.load(); o > 0) return o;
    if (int e = env_cap(); e > 0) return e;
    return omp_get_max_threads();
}

void set_thread_cap(int threads) {
    override_cap.store(threads > 0 ? threads : 0);
}

}  // namespace gallagher
