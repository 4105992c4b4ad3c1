// Command-line front end: price, table, converge, region and the hidden
// oracle-check subcommand.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "dynkin/config.hpp"
#include "dynkin/csv.hpp"
#include "dynkin/error.hpp"
#include "dynkin/harness.hpp"
#include "dynkin/oracle.hpp"
#include "dynkin/solver.hpp"

namespace fs = std::filesystem;
using namespace dynkin;

namespace {

enum Exit { kOk = 0, kFailure = 1, kConfigError = 2, kValidationError = 3, kSizeLimit = 4 };

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::config_parse: return kConfigError;
        case ErrorCode::size_limit_exceeded: return kSizeLimit;
        default: return kValidationError;
    }
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

fs::path csv_path(const RunConfig& cfg, const fs::path& out_dir, const char* fallback) {
    return out_dir / cfg.outputs.csv.value_or(fallback);
}

int cmd_price(const RunConfig& cfg, const fs::path& out_dir, HarnessOptions opts) {
    const auto rows = run_price(cfg, opts);
    const auto table = to_csv(rows);
    std::cout << csv::to_string(table);
    write_file(csv_path(cfg, out_dir, "price.csv"), csv::to_string(table));

    if (cfg.outputs.grid_export) {
        const auto payoffs = cfg.payoffs();
        for (const auto& row : rows) {
            const auto grid = solve(cfg.grid(row.spot, row.n), payoffs, cfg.interval, {.retain_grid = true});
            std::ostringstream text;
            write_grid_csv(text, grid, payoffs);
            write_file(out_dir / ("grid_S0_" + csv::format_double(row.spot) + "_n_" + std::to_string(row.n) + ".csv"),
                       text.str());
        }
    }
    return kOk;
}

int cmd_table(const RunConfig& cfg, const fs::path& out_dir, HarnessOptions opts, Comparator comparator) {
    const auto table = run_table(cfg, comparator, opts);
    std::cout << render(table);
    write_file(csv_path(cfg, out_dir, "table.csv"), csv::to_string(to_csv(table)));
    return kOk;
}

int cmd_converge(const RunConfig& cfg, const fs::path& out_dir, HarnessOptions opts) {
    const auto reports = run_converge(cfg, opts);
    std::cout << render(reports);
    write_file(csv_path(cfg, out_dir, "converge.csv"), csv::to_string(to_csv(reports)));
    return kOk;
}

int cmd_region(const RunConfig& cfg, const fs::path& out_dir) {
    const auto report = run_region(cfg, out_dir);
    auto show = [](const char* name, const StoppingRegion& r) {
        std::cout << name << ": T1 = " << (r.T1 ? csv::format_fixed(*r.T1, 4) : "undefined")
                  << ", T2 = " << (r.T2 ? csv::format_fixed(*r.T2, 4) : "undefined");
        const auto gaps = r.noncontiguous_layers();
        if (!gaps.empty()) std::cout << " (" << gaps.size() << " layers with a non-contiguous band)";
        std::cout << '\n';
    };
    std::cout << "S0 = " << csv::format_double(report.spot) << ", n = " << report.n << '\n';
    show("uncertainty model", report.robust);
    show("Black-Scholes", report.black_scholes);
    for (const auto& f : report.files) std::cout << "wrote " << f.string() << '\n';
    return kOk;
}

int cmd_oracle_check(const RunConfig& cfg, int p_grid) {
    const auto payoffs = cfg.payoffs();
    double worst = 0.0;
    for (double spot : cfg.spots) {
        for (int n : cfg.n_list) {
            const auto params = cfg.grid(spot, n);
            const double lattice = value(solve(params, payoffs, cfg.interval)).value;
            const double tree = oracle::brute_force_value(params, payoffs, cfg.interval, p_grid).value;
            const double diff = std::abs(lattice - tree);
            worst = std::max(worst, diff);
            std::cout << "S0=" << csv::format_double(spot) << " n=" << n << " lattice=" << csv::format_double(lattice)
                      << " tree=" << csv::format_double(tree) << " diff=" << csv::format_double(diff) << '\n';
        }
    }
    std::cout << "max diff " << csv::format_double(worst) << '\n';
    return worst <= 1e-9 ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dynkin game (game option) pricing under volatility uncertainty"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "./out";
    unsigned threads = 0;
    std::string comparator = "robust";
    int p_grid = 101;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "JSON experiment config")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out_dir, "output directory")->capture_default_str();
        sub->add_option("--threads", threads, "worker threads (0 = auto)")->capture_default_str();
    };
    auto* price = app.add_subcommand("price", "price every spot x n cell");
    auto* table = app.add_subcommand("table", "spots x n table, optionally with the Black-Scholes panel");
    auto* converge = app.add_subcommand("converge", "convergence study against the largest n");
    auto* region = app.add_subcommand("region", "seller stopping regions and boundary chart");
    auto* oracle_check = app.add_subcommand("oracle-check", "compare against the brute-force tree");
    oracle_check->group("");
    for (auto* sub : {price, table, converge, region, oracle_check}) common(sub);
    table->add_option("--comparator", comparator, "robust or bs")
        ->check(CLI::IsMember({"robust", "bs"}))
        ->capture_default_str();
    oracle_check->add_option("--p-grid", p_grid, "points in the p grid")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kConfigError;
    }

    try {
        const RunConfig cfg = load_config(config_path);
        const HarnessOptions opts{threads};
        if (*price) return cmd_price(cfg, out_dir, opts);
        if (*table) {
            return cmd_table(cfg, out_dir, opts, comparator == "bs" ? Comparator::black_scholes : Comparator::robust);
        }
        if (*converge) return cmd_converge(cfg, out_dir, opts);
        if (*region) return cmd_region(cfg, out_dir);
        if (*oracle_check) return cmd_oracle_check(cfg, p_grid);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
