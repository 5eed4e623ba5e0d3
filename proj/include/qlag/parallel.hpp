#pragma once

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qlag {

/// Execution policy for the data-parallel kernels.  `parallel` fans
/// independent work items out over OpenMP threads; `serial` is the reference
/// path the tests compare against (identical results, per-item work is
/// deterministic and isolated).
enum class ExecPolicy { serial, parallel };

/// Run fn(i) for i in [0,count).  The first exception wins and is rethrown
/// after the loop joins.
template <typename Fn>
void for_each_index(long count, ExecPolicy policy, Fn&& fn) {
    std::exception_ptr first_error = nullptr;
    const bool par = policy == ExecPolicy::parallel;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) if (par)
#endif
    for (long i = 0; i < count; ++i) {
        try {
            fn(i);
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical(qlag_for_each_index_error)
#endif
            if (!first_error) first_error = std::current_exception();
        }
    }
    (void)par;
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace qlag
