#include "hopfid/parallel.hpp"

#include <atomic>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfid {

namespace {
int g_threads = 0;  // 0 = library default
}

void set_threads(int n) { g_threads = n > 0 ? n : 0; }

int thread_count() {
#ifdef _OPENMP
    return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

void parallel_for(size_t n, const std::function<void(size_t)>& body) {
    if (n == 0) return;
#ifdef _OPENMP
    int t = thread_count();
    if (t > 1 && n > 1) {
        std::exception_ptr err;
        std::mutex mu;
#pragma omp parallel for schedule(dynamic) num_threads(t)
        for (long long i = 0; i < (long long)n; ++i) {
            try {
                body((size_t)i);
            } catch (...) {
                std::lock_guard<std::mutex> lk(mu);
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#endif
    for (size_t i = 0; i < n; ++i) body(i);
}

}  // namespace hopfid
