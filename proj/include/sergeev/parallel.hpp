#pragma once

#include <cstddef>
#include <exception>

#if defined(SERGEEV_HAVE_OPENMP)
#include <omp.h>
#endif

namespace sergeev {

// Every sweep kernel takes one of these; Serial is the reference path the
// parallel one is checked against.
enum class Exec { Serial, Par };

// Runs f(0..count-1). Under Par the iterations must be independent; the
// first exception thrown inside the loop is rethrown after the join.
template <class F>
void parallel_for(Exec exec, std::size_t count, F&& f) {
#if defined(SERGEEV_HAVE_OPENMP)
    if (exec == Exec::Par) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(count); ++i) {
            try {
                f(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < count; ++i) f(i);
}

} // namespace sergeev
