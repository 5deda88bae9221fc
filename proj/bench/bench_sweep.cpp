// Wall-clock comparison of the OpenMP sweep against the serial reference.
// Usage: bench_sweep [repeats]

#include "vacrad/curves.hpp"

#include <fmt/format.h>
#include <omp.h>

#include <chrono>
#include <cstdlib>
#include <vector>

using namespace vacrad;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        f();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char** argv) {
    const int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
    struct Case {
        const char* name;
        Family family;
        double omega_ratio, hi;
        int points;
    };
    const std::vector<Case> cases = {
        {"halfspace w=3", Family::HalfspaceRatio, 3.0, 200.0, 20000},
        {"cavity w=3 b=d/2", Family::CavityRatio, 3.0, 150.0, 400},
        {"decay par xi=10", Family::DecayPar, 1.0, 40.0, 20000},
    };
    fmt::print("threads: {}\n", omp_get_max_threads());
    fmt::print("{:<20} {:>8} {:>12} {:>12} {:>8} {:>10}\n", "curve", "points", "serial [s]", "openmp [s]", "speedup",
               "identical");
    for (const Case& c : cases) {
        CurveSpec spec;
        spec.family = c.family;
        spec.params.omega_ratio = c.omega_ratio;
        spec.lo = 0.1;
        spec.hi = c.hi;
        spec.points = c.points;
        std::vector<CurvePoint> serial, parallel;
        const double ts = best_of(repeats, [&] { serial = sweep_serial(spec); });
        const double tp = best_of(repeats, [&] { parallel = sweep(spec); });
        bool same = serial.size() == parallel.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i].y == parallel[i].y && serial[i].flags == parallel[i].flags;
        fmt::print("{:<20} {:>8} {:>12.4f} {:>12.4f} {:>8.2f} {:>10}\n", c.name, c.points, ts, tp, ts / tp,
                   same ? "yes" : "NO");
    }
}
