#include "dynkin/uncertainty.hpp"

#include <cmath>
#include <string>

#include "dynkin/error.hpp"

namespace dynkin {

void VolatilityInterval::validate() const {
    if (!(std::isfinite(sigma_high) && sigma_high > 0.0)) {
        throw Error(ErrorCode::invalid_params,
                    "sigma_high must be finite and > 0, got " + std::to_string(sigma_high));
    }
    if (!(sigma_low >= 0.0 && sigma_low <= sigma_high)) {
        throw Error(ErrorCode::invalid_params,
                    "sigma_low must lie in [0, sigma_high], got " + std::to_string(sigma_low));
    }
}

PRange p_range(const VolatilityInterval& interval, LogStep a) {
    interval.validate();
    const double ratio = interval.sigma_low / interval.sigma_high;
    return PRange{std::exp(-4.0 * a.a) * ratio * ratio, 1.0};
}

ProbabilityTriple triple(double p, LogStep a) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorCode::domain_error, "p must lie in [0, 1], got " + std::to_string(p));
    }
    const double ea = std::exp(a.a);
    const double up = p / (1.0 + ea);
    return ProbabilityTriple{up, 1.0 - p, up * ea};
}

}  // namespace dynkin
