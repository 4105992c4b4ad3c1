// Wall-time scaling of the lattice solver: doubling n should cost about 4x.

#include <chrono>
#include <cstdio>

#include "dynkin/payoffs.hpp"
#include "dynkin/solver.hpp"

int main() {
    using namespace dynkin;
    const auto payoffs = make_discounted({OptionKind::put, 100.0, 5.0, 1.0, 0.06});
    const VolatilityInterval interval{0.0, 0.4};
    double previous = 0.0;
    for (int n : {400, 800, 1600, 3200, 6400}) {
        const auto start = std::chrono::steady_clock::now();
        const double v = value(solve({0.0, 0.5, n, 80.0}, payoffs, interval)).value;
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("n = %5d  value %.6f  %.4f s", n, v, secs);
        if (previous > 0) std::printf("  ratio %.2f", secs / previous);
        std::printf("\n");
        previous = secs;
    }
}
