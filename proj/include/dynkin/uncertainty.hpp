#pragma once

#include "dynkin/lattice.hpp"

namespace dynkin {

/// The band [sigma_low, sigma_high] in which the instantaneous volatility
/// is only known to lie. sigma_low = 0 is admitted; the error bound of the
/// scheme is only established for sigma_low > 0.
struct VolatilityInterval {
    double sigma_low = 0.0;
    double sigma_high = 0.0;

    void validate() const;
};

/// Admissible values of the one-step uncertainty parameter p. The up move
/// has probability p / (1 + e^a), the down move e^a times that, and the
/// stock stays put with probability 1 - p.
struct PRange {
    double p_min = 0.0;
    double p_max = 1.0;
};

struct ProbabilityTriple {
    double p_up = 0.0;
    double p_stay = 1.0;
    double p_down = 0.0;
};

/// p_min = exp(-4a) * sigma_low^2 / sigma_high^2, p_max = 1.
PRange p_range(const VolatilityInterval& interval, LogStep a);

/// Transition law induced by p. Throws Error(domain_error) if p is outside [0, 1].
ProbabilityTriple triple(double p, LogStep a);

}  // namespace dynkin
