// Serial vs OpenMP trajectory sampling.
//
//   bench_trajectory [points] [repeats]

#include "qloss/witness.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

using namespace qloss;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const std::size_t points = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 200001;
    const int repeats = argc > 2 ? std::atoi(argv[2]) : 3;

    const std::pair<const char*, ChannelModel> cases[] = {
        {"dephasing sin:1,1", ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0))},
        {"amplitude-damping 0.2/2", ChannelModel::amplitude_damping({0.2, 2.0})},
        {"pauli 1,0.5,dcos", ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(0.5),
                                                  RateFunction::damped_cosine(0.8, 0.3, 2.0))},
    };

    std::printf("points=%zu repeats=%d threads=%d\n", points, repeats, omp_get_max_threads());
    std::printf("%-26s %12s %12s %9s %10s\n", "channel", "serial [s]", "openmp [s]", "speedup", "identical");
    for (const auto& [label, ch] : cases) {
        Trajectory serial = sample_trajectory_serial(ch, 30.0, 3);
        Trajectory parallel = serial;
        const double ts = best_of(repeats, [&] { serial = sample_trajectory_serial(ch, 30.0, points); });
        const double tp = best_of(repeats, [&] { parallel = sample_trajectory(ch, 30.0, points); });
        bool same = true;
        for (std::size_t i = 0; i < points && same; ++i)
            same = serial.snapshots[i].quantum_loss == parallel.snapshots[i].quantum_loss &&
                   serial.loss_derivative[i] == parallel.loss_derivative[i];
        std::printf("%-26s %12.4f %12.4f %9.2f %10s\n", label, ts, tp, ts / tp, same ? "yes" : "NO");
    }
}
