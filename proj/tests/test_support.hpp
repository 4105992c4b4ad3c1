#pragma once

#include <cmath>
#include <random>

#include "dynkin/payoffs.hpp"

namespace dynkin::testing {

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline GameOptionSpec table_put() { return {OptionKind::put, 100.0, 5.0, 1.0, 0.06}; }
inline GameOptionSpec table_call() { return {OptionKind::call, 100.0, 5.0, 1.0, 0.06}; }

/// f = g = x, h = 0: a martingale payoff.
inline DiscountedPayoffs identity_payoffs() {
    auto id = [](double, double x) { return x; };
    return {id, id, [](double, double) { return 0.0; }};
}

inline DiscountedPayoffs shifted(const DiscountedPayoffs& p, double c) {
    return {[f = p.f, c](double t, double x) { return f(t, x) + c; },
            [g = p.g, c](double t, double x) { return g(t, x) + c; }, p.h};
}

/// Random game option instance in the ranges used by the oracle checks.
struct RandomInstance {
    GameOptionSpec spec;
    double sigma_low;
    double sigma_high;
    double spot;
};

inline RandomInstance random_instance(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    RandomInstance inst;
    inst.spec.kind = u(rng) < 0.5 ? OptionKind::put : OptionKind::call;
    inst.spec.strike = 50.0 + 100.0 * u(rng);
    inst.spec.penalty = 0.5 + 19.5 * u(rng);
    inst.spec.penalty_factor = 1.0;
    inst.spec.rate = 0.1 * u(rng);
    inst.sigma_high = 0.1 + 0.5 * u(rng);
    inst.sigma_low = inst.sigma_high * u(rng);
    inst.spot = 50.0 + 100.0 * u(rng);
    return inst;
}

}  // namespace dynkin::testing
