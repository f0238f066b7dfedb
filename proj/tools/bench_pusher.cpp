// Throughput comparison between the serial reference pusher and the OpenMP
// ensemble kernel, plus a bitwise agreement check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lorentz/ensemble.hpp"

using namespace lorentz;

namespace {

Ensemble make_ensemble(long n) {
    Ensemble ens;
    ens.states.reserve(static_cast<std::size_t>(n));
    for (long i = 0; i < n; ++i) {
        const double up = 0.1 + 2.0 * static_cast<double>(i) / static_cast<double>(n);
        ens.states.push_back(
            {0.0, {}, {std::sqrt(1.0 + up * up), up, 0.0, 0.0}});
    }
    return ens;
}

double run(Ensemble& ens, const FieldMap& map, double dt, long steps, Stepper stepper,
           bool parallel) {
    const auto t0 = std::chrono::steady_clock::now();
    if (parallel)
        advance_parallel(ens, map, Coupling{1.0}, dt, steps, stepper);
    else
        advance_serial(ens, map, Coupling{1.0}, dt, steps, stepper);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void bench(const char* label, const FieldMap& map, Stepper stepper, long particles,
           long steps) {
    Ensemble serial = make_ensemble(particles);
    Ensemble parallel = make_ensemble(particles);

    const double dt = 1e-3;
    const double ts = run(serial, map, dt, steps, stepper, false);
    const double tp = run(parallel, map, dt, steps, stepper, true);

    double mismatch = 0.0;
    for (std::size_t i = 0; i < serial.states.size(); ++i) {
        mismatch = std::max(mismatch, max_abs_diff(serial.states[i].u, parallel.states[i].u));
        mismatch = std::max(mismatch, max_abs_diff(serial.states[i].x, parallel.states[i].x));
    }

    const double total = static_cast<double>(particles) * static_cast<double>(steps);
    std::printf("%-12s serial %8.3f Msteps/s | parallel %8.3f Msteps/s | speedup %5.2fx | "
                "max diff %g\n",
                label, total / ts / 1e6, total / tp / 1e6, ts / tp, mismatch);
}

}  // namespace

int main(int argc, char** argv) {
    long particles = 4096;
    long steps = 2000;
    if (argc > 1) particles = std::stol(argv[1]);
    if (argc > 2) steps = std::stol(argv[2]);

#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; parallel path runs serially\n");
#endif
    std::printf("particles=%ld steps=%ld\n", particles, steps);

    const FieldMap uniform = FieldMap::uniform({0.2, 0.0, 0.0}, {0.0, 0.0, 1.0});
    const FieldMap varying = FieldMap::varying([](const FourVector& x) {
        return FieldTensor{{0.0, 0.0, 0.0}, {0.0, 0.0, 1.0 + 0.1 * x[1]}};
    });

    bench("exact", uniform, Stepper::Exact, particles, steps);
    bench("rk4", uniform, Stepper::Rk4, particles, steps);
    bench("rk4 varying", varying, Stepper::Rk4Renorm, particles, steps);
    return 0;
}
