#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "dynkin/config.hpp"
#include "dynkin/csv.hpp"
#include "dynkin/regions.hpp"

namespace dynkin {

struct PriceRow {
    double spot = 0.0;
    int n = 0;
    double value = 0.0;
};

enum class Comparator { robust, black_scholes };

/// Independent (spot, n) solves are spread over `threads` workers
/// (0 = hardware concurrency). Results never depend on scheduling.
struct HarnessOptions {
    unsigned threads = 0;
};

/// One row per spot x n, spots in config order, n ascending.
std::vector<PriceRow> run_price(const RunConfig& config, HarnessOptions options = {});

struct PriceTable {
    std::vector<double> spots;
    std::vector<int> ns;
    std::vector<std::vector<double>> robust;               // [spot][n]
    std::optional<std::vector<std::vector<double>>> black_scholes;  // sigma = sigma_high
};

/// Throws Error(empty_n_list) when there is nothing to tabulate.
PriceTable run_table(const RunConfig& config, Comparator comparator, HarnessOptions options = {});

struct ConvergenceReport {
    double spot = 0.0;
    std::vector<int> ns;
    std::vector<double> values;
    std::vector<double> successive_diffs;  // |V_{i+1} - V_i|
    std::vector<double> errors;            // |V_i - V_{n_max}|, i < last
    std::optional<double> alpha;           // fitted order, absent if any error is 0
    double residual = 0.0;                 // RMS of the log-log fit
    double spread = 0.0;                   // max - min over all values
    bool eventually_decreasing = false;    // errors strictly decrease over the last 3 entries
};

/// One report per spot. Requires at least three n values, the largest of
/// which serves as the reference.
std::vector<ConvergenceReport> run_converge(const RunConfig& config, HarnessOptions options = {});

/// Least-squares fit of log(errors) against log(ns); returns (alpha, RMS
/// residual) with errors ~ C n^{-alpha}.
std::optional<std::pair<double, double>> fit_order(const std::vector<int>& ns,
                                                   const std::vector<double>& errors);

struct RegionReport {
    double spot = 0.0;
    int n = 0;
    StoppingRegion robust;
    StoppingRegion black_scholes;
    std::vector<std::filesystem::path> files;
};

/// Solves the robust and the sigma_high binomial game at the single spot
/// and largest n, writes region_{robust,bs}.csv, boundary_{robust,bs}.csv
/// and, if outputs.svg is set, the boundary chart into `out_dir`.
RegionReport run_region(const RunConfig& config, const std::filesystem::path& out_dir);

csv::Table to_csv(const std::vector<PriceRow>& rows);
csv::Table to_csv(const PriceTable& table);
csv::Table to_csv(const std::vector<ConvergenceReport>& reports);

/// Human-readable table with 4 decimals.
std::string render(const PriceTable& table);
std::string render(const std::vector<ConvergenceReport>& reports);

}  // namespace dynkin
