#include "degen/exec.hpp"

#include <atomic>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace degen::exec {

namespace {
std::atomic<bool> g_parallel{
#ifdef _OPENMP
    true
#else
    false
#endif
};
}  // namespace

void set_parallel(bool on) { g_parallel.store(on); }

bool parallel_enabled() {
#ifdef _OPENMP
    return g_parallel.load();
#else
    return false;
#endif
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
#ifdef _OPENMP
    if (parallel_enabled()) {
        // Dynamic schedule: per-item cost varies a lot (symbolic lift solves
        // range from trivial to heavy depending on the monomial).
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace degen::exec
