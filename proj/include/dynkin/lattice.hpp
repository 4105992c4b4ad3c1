#pragma once

#include <cstddef>

namespace dynkin {

/// Geometry of a recombining lattice started at (t0, spot) with n equal
/// time steps up to maturity.
struct GridParams {
    double t0 = 0.0;
    double maturity = 0.0;
    int n = 0;
    double spot = 0.0;

    /// Throws Error(invalid_params) unless 0 <= t0 < maturity, n >= 1 and spot > 0.
    void validate() const;

    double time_step() const noexcept { return (maturity - t0) / n; }
};

/// Log-price increment between neighbouring grid nodes.
struct LogStep {
    double a = 0.0;
};

/// a = sigma_high * sqrt((T - t0) / n).
LogStep step_size(const GridParams& params, double sigma_high);

/// s * exp(a * z). Prices are recomputed on demand rather than stored.
inline double node_value(double s, LogStep a, int z);

/// t0 + k (T - t0) / n, with the last layer pinned to T exactly.
double layer_time(const GridParams& params, int k);

/// Number of nodes in trinomial layer k (2k + 1).
constexpr std::size_t layer_width(int k) noexcept { return 2 * static_cast<std::size_t>(k) + 1; }

}  // namespace dynkin

#include <cmath>

inline double dynkin::node_value(double s, LogStep a, int z) {
    return s * std::exp(a.a * static_cast<double>(z));
}
