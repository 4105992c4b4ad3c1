#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dynkin/lattice.hpp"
#include "dynkin/payoffs.hpp"
#include "dynkin/uncertainty.hpp"

namespace dynkin {

enum class PayoffKind { put, call, constant };

/// One experiment, read from a flat JSON document:
///
///   {
///     "sigma_low": 0.0, "sigma_high": 0.4, "rate": 0.06,
///     "kind": "put", "strike": 100, "penalty": 5, "penalty_factor": 1,
///     "t0": 0, "maturity": 0.5, "n_list": [200, 400], "spots": [80, 100],
///     "outputs": {"csv": "prices.csv", "svg": "region.svg", "grid_export": false}
///   }
///
/// kind "constant" replaces strike/penalty/penalty_factor by "constant": c
/// and prices f = g = c. Unknown keys are rejected.
struct RunConfig {
    VolatilityInterval interval;
    PayoffKind kind = PayoffKind::put;
    GameOptionSpec option;
    double constant = 0.0;

    double t0 = 0.0;
    double maturity = 0.0;
    std::vector<int> n_list;
    std::vector<double> spots;

    struct Outputs {
        std::optional<std::string> csv;
        std::optional<std::string> svg;
        bool grid_export = false;
    } outputs;

    GridParams grid(double spot, int n) const { return {t0, maturity, n, spot}; }
    DiscountedPayoffs payoffs() const;
    /// Rate used to map lattice prices back to stock prices.
    double rate() const noexcept { return kind == PayoffKind::constant ? 0.0 : option.rate; }

    /// Re-checks every domain invariant. Throws Error(invalid_params) or
    /// Error(empty_n_list).
    void validate() const;
};

/// Throws Error(config_parse) with the offending field path on malformed
/// input, then validates.
RunConfig parse_config(std::string_view json_text);
RunConfig load_config(const std::filesystem::path& path);

}  // namespace dynkin
