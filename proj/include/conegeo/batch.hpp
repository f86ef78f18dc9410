#pragma once

// Index-addressed batch runner. Each trial derives everything it needs from
// its index, so the schedule cannot leak into the results: the OpenMP path
// must produce output bit-identical to the serial loop (tested, and timed
// against it by the bench tool).

#include <cstddef>
#include <exception>
#include <stdexcept>
#include <vector>

namespace conegeo {

template <typename Row, typename F>
std::vector<Row> run_batch_serial(int trials, F&& f) {
    if (trials < 0) throw std::invalid_argument("negative trial count");
    std::vector<Row> rows(static_cast<size_t>(trials));
    for (int i = 0; i < trials; ++i) rows[static_cast<size_t>(i)] = f(i);
    return rows;
}

// Failures are captured per slot and the lowest-index one is rethrown after
// the loop, matching what the serial loop would have thrown first.
template <typename Row, typename F>
std::vector<Row> run_batch_parallel(int trials, F&& f) {
    if (trials < 0) throw std::invalid_argument("negative trial count");
    std::vector<Row> rows(static_cast<size_t>(trials));
    std::vector<std::exception_ptr> errs(static_cast<size_t>(trials));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < trials; ++i) {
        try {
            rows[static_cast<size_t>(i)] = f(i);
        } catch (...) {
            errs[static_cast<size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& e : errs)
        if (e) std::rethrow_exception(e);
    return rows;
}

template <typename Row, typename F>
std::vector<Row> run_batch(int trials, bool parallel, F&& f) {
    return parallel ? run_batch_parallel<Row>(trials, f)
                    : run_batch_serial<Row>(trials, f);
}

} // namespace conegeo
