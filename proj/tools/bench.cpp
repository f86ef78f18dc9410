// Times the serial batch path against the OpenMP one on both sweep
// workloads and verifies they emit identical bytes.

#include <chrono>
#include <cstdio>
#include <cstdint>
#include <string>

#include "conegeo/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace conegeo;

namespace {

template <typename F>
double seconds(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

} // namespace

int main(int argc, char** argv) {
    uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 7;
    int pl_trials = argc > 2 ? std::stoi(argv[2]) : 12;
    int tri_trials = argc > 3 ? std::stoi(argv[3]) : 2000;
    int refine = 8;

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both paths run serially\n");
#endif

    bool ok = true;
    std::string a, b;
    double ts = seconds(
        [&] { a = pl_sweep_csv(pl_sweep(seed, pl_trials, refine, false)); });
    double tp = seconds(
        [&] { b = pl_sweep_csv(pl_sweep(seed, pl_trials, refine, true)); });
    ok = ok && a == b;
    std::printf(
        "pl-sweep       %4d trials refine %d: serial %7.3fs  parallel %7.3fs"
        "  speedup %.2fx  identical %s\n",
        pl_trials, refine, ts, tp, ts / tp, a == b ? "yes" : "NO");

    ts = seconds(
        [&] { a = triangle_sweep_csv(triangle_sweep(seed, tri_trials, false)); });
    tp = seconds(
        [&] { b = triangle_sweep_csv(triangle_sweep(seed, tri_trials, true)); });
    ok = ok && a == b;
    std::printf(
        "triangle-sweep %4d trials:          serial %7.3fs  parallel %7.3fs"
        "  speedup %.2fx  identical %s\n",
        tri_trials, ts, tp, ts / tp, a == b ? "yes" : "NO");

    return ok ? 0 : 1;
}
