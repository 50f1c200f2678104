// Times the OpenMP sweep evaluator against the serial reference on a large
// coupling grid and checks they agree.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "stirling/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace stirling;

namespace {

SweepSpec bench_spec(int steps) {
    SweepSpec spec;
    spec.knob = SweepKnob::J;
    spec.start = 0.05;
    spec.stop = 4.5;
    spec.steps = steps;
    spec.base.medium = WorkingMedium::coupled_spins();
    spec.base.lambda1 = 2.0;
    spec.base.lambda2 = 1.0;
    spec.base.t_hot = 3.0;
    spec.base.t_cold = 2.0;
    return spec;
}

template <typename F>
double time_ms(F&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const int steps = argc > 1 ? std::atoi(argv[1]) : 400000;
    const SweepSpec spec = bench_spec(steps);

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("grid points: %d (coupled medium, J sweep)\n", steps);

    // warm-up
    evaluate(bench_spec(1000));

    std::vector<CycleReport> serial_rows, parallel_rows;
    const double t_serial = time_ms([&] { serial_rows = evaluate_serial(spec); });
    const double t_parallel = time_ms([&] { parallel_rows = evaluate(spec); });

    long mismatches = 0;
    for (std::size_t i = 0; i < serial_rows.size(); ++i) {
        if (serial_rows[i].work != parallel_rows[i].work ||
            serial_rows[i].sigma != parallel_rows[i].sigma ||
            serial_rows[i].mode != parallel_rows[i].mode)
            ++mismatches;
    }

    std::printf("serial:   %9.2f ms  (%.0f rows/s)\n", t_serial, steps / t_serial * 1e3);
    std::printf("parallel: %9.2f ms  (%.0f rows/s)\n", t_parallel, steps / t_parallel * 1e3);
    std::printf("speedup:  %.2fx, mismatching rows: %ld\n", t_serial / t_parallel, mismatches);
    return mismatches == 0 ? 0 : 1;
}
