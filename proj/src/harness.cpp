#include "dynkin/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <thread>

#include "dynkin/binomial.hpp"
#include "dynkin/error.hpp"
#include "dynkin/solver.hpp"
#include "dynkin/svg.hpp"

namespace dynkin {
namespace {

// Runs job(i) for i in [0, count). Each job writes only its own slot, so
// the outcome is independent of the thread count.
template <class Job>
void parallel_for(std::size_t count, unsigned threads, Job job) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count && !failed; i = next++) {
                try {
                    job(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<int> sorted_ns(const RunConfig& config) {
    std::vector<int> ns = config.n_list;
    std::sort(ns.begin(), ns.end());
    return ns;
}

double robust_value(const RunConfig& config, double spot, int n, const DiscountedPayoffs& payoffs) {
    return value(solve(config.grid(spot, n), payoffs, config.interval)).value;
}

double bs_value(const RunConfig& config, double spot, int n, const DiscountedPayoffs& payoffs) {
    return crr_game_price(BinomialParams{config.interval.sigma_high, config.grid(spot, n)}, payoffs).value;
}

using Panel = std::vector<std::vector<double>>;

Panel sweep(const RunConfig& config, const std::vector<int>& ns, HarnessOptions options, bool binomial) {
    const auto payoffs = config.payoffs();
    const std::size_t cols = ns.size();
    Panel panel(config.spots.size(), std::vector<double>(cols));
    parallel_for(config.spots.size() * cols, options.threads, [&](std::size_t cell) {
        const std::size_t row = cell / cols;
        const std::size_t col = cell % cols;
        const double spot = config.spots[row];
        panel[row][col] = binomial ? bs_value(config, spot, ns[col], payoffs)
                                   : robust_value(config, spot, ns[col], payoffs);
    });
    return panel;
}

std::string fixed4(double v) { return csv::format_fixed(v, 4); }

}  // namespace

std::vector<PriceRow> run_price(const RunConfig& config, HarnessOptions options) {
    config.validate();
    const auto ns = sorted_ns(config);
    const Panel panel = sweep(config, ns, options, false);
    std::vector<PriceRow> rows;
    for (std::size_t r = 0; r < config.spots.size(); ++r) {
        for (std::size_t c = 0; c < ns.size(); ++c) rows.push_back({config.spots[r], ns[c], panel[r][c]});
    }
    return rows;
}

PriceTable run_table(const RunConfig& config, Comparator comparator, HarnessOptions options) {
    if (config.n_list.empty()) throw Error(ErrorCode::empty_n_list, "table needs at least one n");
    config.validate();
    PriceTable table;
    table.spots = config.spots;
    table.ns = sorted_ns(config);
    table.robust = sweep(config, table.ns, options, false);
    if (comparator == Comparator::black_scholes) table.black_scholes = sweep(config, table.ns, options, true);
    return table;
}

std::optional<std::pair<double, double>> fit_order(const std::vector<int>& ns,
                                                   const std::vector<double>& errors) {
    if (ns.size() != errors.size() || ns.size() < 2) return std::nullopt;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < ns.size(); ++i) {
        if (!(errors[i] > 0.0)) return std::nullopt;
        x.push_back(std::log(static_cast<double>(ns[i])));
        y.push_back(std::log(errors[i]));
    }
    const double m = static_cast<double>(x.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < x.size(); ++i) mx += x[i], my += y[i];
    mx /= m;
    my /= m;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return std::nullopt;
    const double slope = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (my + slope * (x[i] - mx));
        ss += r * r;
    }
    return std::make_pair(-slope, std::sqrt(ss / m));
}

std::vector<ConvergenceReport> run_converge(const RunConfig& config, HarnessOptions options) {
    if (config.n_list.size() < 3) {
        throw Error(ErrorCode::insufficient_n_list, "convergence study needs at least three n values");
    }
    config.validate();
    const auto ns = sorted_ns(config);
    const Panel panel = sweep(config, ns, options, false);

    std::vector<ConvergenceReport> reports;
    for (std::size_t r = 0; r < config.spots.size(); ++r) {
        ConvergenceReport rep;
        rep.spot = config.spots[r];
        rep.ns = ns;
        rep.values = panel[r];
        const double reference = rep.values.back();
        for (std::size_t i = 0; i + 1 < rep.values.size(); ++i) {
            rep.successive_diffs.push_back(std::abs(rep.values[i + 1] - rep.values[i]));
            rep.errors.push_back(std::abs(rep.values[i] - reference));
        }
        const auto [lo, hi] = std::minmax_element(rep.values.begin(), rep.values.end());
        rep.spread = *hi - *lo;
        const std::vector<int> fit_ns(ns.begin(), ns.end() - 1);
        if (auto fit = fit_order(fit_ns, rep.errors)) {
            rep.alpha = fit->first;
            rep.residual = fit->second;
        }
        const auto& e = rep.errors;
        rep.eventually_decreasing =
            e.size() >= 3 && e[e.size() - 3] > e[e.size() - 2] && e[e.size() - 2] > e[e.size() - 1];
        reports.push_back(std::move(rep));
    }
    return reports;
}

RegionReport run_region(const RunConfig& config, const std::filesystem::path& out_dir) {
    config.validate();
    if (config.spots.size() != 1) {
        throw Error(ErrorCode::invalid_params, "region extraction needs exactly one spot");
    }
    RegionReport report;
    report.spot = config.spots.front();
    report.n = *std::max_element(config.n_list.begin(), config.n_list.end());
    const auto payoffs = config.payoffs();
    const double strike = config.kind == PayoffKind::constant ? report.spot : config.option.strike;
    const GridParams params = config.grid(report.spot, report.n);

    const ValueGrid robust = solve(params, payoffs, config.interval, {.retain_grid = true});
    const RegionFlags robust_flags = classify(robust, payoffs);
    report.robust = seller_boundary(robust_flags, robust, strike, config.rate());

    const ValueGrid bs = crr_solve({config.interval.sigma_high, params}, payoffs, {.retain_grid = true});
    const RegionFlags bs_flags = classify(bs, payoffs);
    report.black_scholes = seller_boundary(bs_flags, bs, strike, config.rate());

    std::filesystem::create_directories(out_dir);
    auto emit = [&](const std::string& name, auto&& writer) {
        const auto path = out_dir / name;
        std::ofstream out(path, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        writer(out);
        report.files.push_back(path);
    };
    emit("region_robust.csv", [&](std::ostream& o) { write_region_csv(o, robust_flags, robust, report.robust); });
    emit("boundary_robust.csv", [&](std::ostream& o) { write_boundary_csv(o, report.robust); });
    emit("region_bs.csv", [&](std::ostream& o) { write_region_csv(o, bs_flags, bs, report.black_scholes); });
    emit("boundary_bs.csv", [&](std::ostream& o) { write_boundary_csv(o, report.black_scholes); });

    if (config.outputs.svg) {
        svg::Chart chart;
        chart.title = "Seller stopping boundary";
        auto curve = [](const StoppingRegion& region, std::string label, std::string color) {
            svg::Series s{std::move(label), std::move(color), {}};
            for (const auto& layer : region.layers) {
                if (layer.b) s.points.emplace_back(layer.t, *layer.b);
            }
            return s;
        };
        chart.series.push_back(curve(report.robust, "uncertainty", "blue"));
        chart.series.push_back(curve(report.black_scholes, "Black-Scholes", "green"));
        chart.hlines.emplace_back("K", strike);
        emit(*config.outputs.svg, [&](std::ostream& o) { svg::write(o, chart); });
    }
    return report;
}

csv::Table to_csv(const std::vector<PriceRow>& rows) {
    csv::Table t{{"S0", "n", "value"}, {}};
    for (const auto& r : rows) {
        t.rows.push_back({csv::format_double(r.spot), std::to_string(r.n), csv::format_double(r.value)});
    }
    return t;
}

csv::Table to_csv(const PriceTable& table) {
    csv::Table t{{"model", "S0", "n", "value"}, {}};
    auto panel = [&](const char* model, const Panel& values) {
        for (std::size_t r = 0; r < table.spots.size(); ++r) {
            for (std::size_t c = 0; c < table.ns.size(); ++c) {
                t.rows.push_back({model, csv::format_double(table.spots[r]), std::to_string(table.ns[c]),
                                  csv::format_double(values[r][c])});
            }
        }
    };
    panel("robust", table.robust);
    if (table.black_scholes) panel("black_scholes", *table.black_scholes);
    return t;
}

csv::Table to_csv(const std::vector<ConvergenceReport>& reports) {
    csv::Table t{{"S0", "n", "value", "successive_diff", "error_vs_reference"}, {}};
    for (const auto& rep : reports) {
        for (std::size_t i = 0; i < rep.ns.size(); ++i) {
            t.rows.push_back({csv::format_double(rep.spot), std::to_string(rep.ns[i]),
                              csv::format_double(rep.values[i]),
                              i > 0 ? csv::format_double(rep.successive_diffs[i - 1]) : "",
                              i < rep.errors.size() ? csv::format_double(rep.errors[i]) : ""});
        }
    }
    return t;
}

std::string render(const PriceTable& table) {
    std::ostringstream out;
    auto panel = [&](const char* title, const Panel& values) {
        out << title << '\n' << std::left << std::setw(8) << "S0";
        for (int n : table.ns) out << std::right << std::setw(12) << ("n = " + std::to_string(n));
        out << '\n';
        for (std::size_t r = 0; r < table.spots.size(); ++r) {
            out << std::left << std::setw(8) << csv::format_double(table.spots[r]);
            for (double v : values[r]) out << std::right << std::setw(12) << fixed4(v);
            out << '\n';
        }
    };
    panel("Values under volatility uncertainty", table.robust);
    if (table.black_scholes) {
        out << '\n';
        panel("Values for Black-Scholes (sigma = sigma_high)", *table.black_scholes);
    }
    return out.str();
}

std::string render(const std::vector<ConvergenceReport>& reports) {
    std::ostringstream out;
    for (const auto& rep : reports) {
        out << "S0 = " << csv::format_double(rep.spot) << " (reference n = " << rep.ns.back() << ")\n";
        for (std::size_t i = 0; i < rep.ns.size(); ++i) {
            out << "  n = " << std::setw(6) << rep.ns[i] << "  value " << fixed4(rep.values[i]);
            if (i < rep.errors.size()) out << "  |V - V_ref| " << csv::format_fixed(rep.errors[i], 6);
            out << '\n';
        }
        out << "  spread " << fixed4(rep.spread);
        if (rep.alpha) {
            out << "  fitted order " << csv::format_fixed(*rep.alpha, 3) << " (rms residual "
                << csv::format_fixed(rep.residual, 3) << ")";
        } else {
            out << "  fitted order undefined";
        }
        out << (rep.eventually_decreasing ? "  errors decreasing" : "  errors not monotone") << '\n';
    }
    return out.str();
}

}  // namespace dynkin
