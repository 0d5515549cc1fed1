#pragma once

#include <cstddef>
#include <exception>

#include "adpt/assignment.hpp"

namespace adpt {

/// How matrix kernels are evaluated. Serial is the reference path; both
/// produce bit-identical matrices because every entry is a pure function.
enum class Execution { Serial, Parallel };

/// Below this many entries the OpenMP path runs inline.
inline constexpr std::size_t kParallelMinEntries = 64;

template <class EntryFn>
void fill_matrix_serial(WeightMatrix& m, EntryFn&& entry) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            m(r, c) = entry(r, c);
        }
    }
}

template <class EntryFn>
void fill_matrix_parallel(WeightMatrix& m, EntryFn&& entry) {
    const long rows = static_cast<long>(m.rows());
    const long cols = static_cast<long>(m.cols());
    const long total = rows * cols;
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) if (total >= static_cast<long>(kParallelMinEntries))
    for (long k = 0; k < total; ++k) {
        const auto r = static_cast<std::size_t>(k / cols);
        const auto c = static_cast<std::size_t>(k % cols);
        try {
            m(r, c) = entry(r, c);
        } catch (...) {
#pragma omp critical(adpt_fill_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

template <class EntryFn>
void fill_matrix(WeightMatrix& m, Execution exec, EntryFn&& entry) {
    if (exec == Execution::Serial) {
        fill_matrix_serial(m, entry);
    } else {
        fill_matrix_parallel(m, entry);
    }
}

}  // namespace adpt
