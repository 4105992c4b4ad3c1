#include "dynkin/lattice.hpp"

#include <cmath>
#include <string>

#include "dynkin/error.hpp"

namespace dynkin {

void GridParams::validate() const {
    if (!(std::isfinite(t0) && std::isfinite(maturity) && t0 >= 0.0 && t0 < maturity)) {
        throw Error(ErrorCode::invalid_params,
                    "grid: need 0 <= t0 < maturity, got t0=" + std::to_string(t0) +
                        " maturity=" + std::to_string(maturity));
    }
    if (n < 1) {
        throw Error(ErrorCode::invalid_params, "grid: n must be >= 1, got " + std::to_string(n));
    }
    if (!(std::isfinite(spot) && spot > 0.0)) {
        throw Error(ErrorCode::invalid_params, "grid: spot must be > 0, got " + std::to_string(spot));
    }
}

LogStep step_size(const GridParams& params, double sigma_high) {
    params.validate();
    if (!(std::isfinite(sigma_high) && sigma_high > 0.0)) {
        throw Error(ErrorCode::invalid_params,
                    "sigma_high must be > 0, got " + std::to_string(sigma_high));
    }
    return LogStep{sigma_high * std::sqrt((params.maturity - params.t0) / params.n)};
}

double layer_time(const GridParams& params, int k) {
    if (k < 0 || k > params.n) {
        throw Error(ErrorCode::index_out_of_range,
                    "layer " + std::to_string(k) + " outside 0.." + std::to_string(params.n));
    }
    if (k == params.n) return params.maturity;
    return params.t0 + k * ((params.maturity - params.t0) / params.n);
}

}  // namespace dynkin
