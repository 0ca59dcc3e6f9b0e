#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace posetfr {

// Kernels take an explicit mode so the serial path stays available as a
// reference implementation for tests and benchmarks.
enum class ExecMode { serial, parallel };

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class Fn>
void parallel_for(ExecMode mode, std::int64_t count, Fn&& fn) {
    if (mode == ExecMode::parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) fn(i);
        return;
#endif
    }
    for (std::int64_t i = 0; i < count; ++i) fn(i);
}

}  // namespace posetfr
