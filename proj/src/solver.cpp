#include "dynkin/solver.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "dynkin/csv.hpp"
#include "dynkin/error.hpp"

namespace dynkin {

ValueGrid::ValueGrid(GridParams params, LogStep a, int stride, bool retain)
    : params_(params), a_(a), stride_(stride), retained_(retain) {
    if (retain) {
        values_.resize(offset(params_.n + 1));
        continuation_.resize(offset(params_.n));
    } else {
        values_.resize(1);
    }
}

std::size_t ValueGrid::offset(int k) const {
    const auto kk = static_cast<std::size_t>(k);
    return stride_ == 1 ? kk * kk : kk * (kk + 1) / 2;
}

std::span<const double> ValueGrid::layer(int k) const {
    if (k < 0 || k > params_.n) {
        throw Error(ErrorCode::index_out_of_range, "layer " + std::to_string(k) + " out of range");
    }
    if (!retained_) {
        if (k != 0) throw Error(ErrorCode::missing_grid, "grid was solved without retain_grid");
        return {values_.data(), 1};
    }
    return {values_.data() + offset(k), width(k)};
}

std::span<double> ValueGrid::layer(int k) {
    auto view = std::as_const(*this).layer(k);
    return {const_cast<double*>(view.data()), view.size()};
}

std::span<const double> ValueGrid::continuation(int k) const {
    if (!retained_) throw Error(ErrorCode::missing_grid, "grid was solved without retain_grid");
    if (k < 0 || k >= params_.n) {
        throw Error(ErrorCode::index_out_of_range,
                    "continuation layer " + std::to_string(k) + " out of range");
    }
    return {continuation_.data() + offset(k), width(k)};
}

std::span<double> ValueGrid::continuation(int k) {
    auto view = std::as_const(*this).continuation(k);
    return {const_cast<double*>(view.data()), view.size()};
}

namespace {

// The expectation is stay + p * slope with slope the p = 1 drift, so the sup
// over [p_min, 1] sits at an endpoint.
inline double endpoint_max(double down, double stay, double up, const PRange& range,
                           const ProbabilityTriple& unit) {
    const double slope = unit.p_up * (up - stay) + unit.p_down * (down - stay);
    return stay + std::max(range.p_min * slope, range.p_max * slope);
}

[[noreturn]] void non_finite(const char* what, int k, int z, double v) {
    std::ostringstream msg;
    msg << "payoff " << what << " is not finite at node (k=" << k << ", z=" << z << "): " << v;
    throw Error(ErrorCode::numeric_overflow, msg.str());
}

struct OrderCheck {
    double worst_gap = -kOrderTolerance;
    std::optional<OrderViolation> worst;

    void observe(int k, int z, double f, double g) {
        if (g - f < worst_gap) {
            worst_gap = g - f;
            worst = OrderViolation{k, z, f, g};
        }
    }
    void raise_if_violated() const {
        if (worst) throw Error(ErrorCode::order_violation, describe(*worst));
    }
};

}  // namespace

double continuation(std::span<const double> next_layer, int z, const PRange& range, LogStep a) {
    if (next_layer.size() % 2 == 0) {
        throw Error(ErrorCode::index_out_of_range, "next layer must have an odd number of nodes");
    }
    const int half = static_cast<int>(next_layer.size() / 2);
    if (z - 1 < -half || z + 1 > half) {
        throw Error(ErrorCode::index_out_of_range,
                    "node " + std::to_string(z) + " has no neighbours in a layer of half-width " +
                        std::to_string(half));
    }
    const auto centre = static_cast<std::size_t>(z + half);
    return endpoint_max(next_layer[centre - 1], next_layer[centre], next_layer[centre + 1],
                        range, triple(1.0, a));
}

ValueGrid solve(const GridParams& params, const DiscountedPayoffs& payoffs,
                const VolatilityInterval& interval, SolveOptions options) {
    params.validate();
    interval.validate();
    const LogStep a = step_size(params, interval.sigma_high);
    const PRange range = p_range(interval, a);
    const ProbabilityTriple unit = triple(1.0, a);
    const double dt = params.time_step();
    const int n = params.n;

    ValueGrid grid(params, a, 1, options.retain_grid);
    std::vector<double> next(layer_width(n));
    std::vector<double> cur(layer_width(n));
    OrderCheck order;

    const double T = layer_time(params, n);
    for (int z = -n; z <= n; ++z) {
        const double x = node_value(params.spot, a, z);
        const double f = payoffs.f(T, x);
        const double g = payoffs.g(T, x);
        if (!std::isfinite(f)) non_finite("f", n, z, f);
        if (!std::isfinite(g)) non_finite("g", n, z, g);
        order.observe(n, z, f, g);
        next[static_cast<std::size_t>(z + n)] = f;
    }
    if (options.retain_grid) std::copy_n(next.begin(), layer_width(n), grid.layer(n).begin());

    for (int k = n - 1; k >= 0; --k) {
        const double t = layer_time(params, k);
        const std::span<double> cont_out =
            options.retain_grid ? grid.continuation(k) : std::span<double>{};
        for (int z = -k; z <= k; ++z) {
            const auto i = static_cast<std::size_t>(z + k);  // next[i + 1] is J_{k+1}(z)
            const double x = node_value(params.spot, a, z);
            const double f = payoffs.f(t, x);
            const double g = payoffs.g(t, x);
            const double h = payoffs.h(t, x);
            if (!std::isfinite(f)) non_finite("f", k, z, f);
            if (!std::isfinite(g)) non_finite("g", k, z, g);
            if (!std::isfinite(h)) non_finite("h", k, z, h);
            order.observe(k, z, f, g);

            const double cont = dt * h + endpoint_max(next[i], next[i + 1], next[i + 2], range, unit);
            cur[i] = std::max(f, std::min(g, cont));
            if (!cont_out.empty()) cont_out[i] = cont;
        }
        if (options.retain_grid) std::copy_n(cur.begin(), layer_width(k), grid.layer(k).begin());
        std::swap(cur, next);
    }
    order.raise_if_violated();
    if (!options.retain_grid) grid.layer(0)[0] = next[0];
    return grid;
}

GameValue value(const ValueGrid& grid) { return GameValue{grid.root()}; }

void write_grid_csv(std::ostream& out, const ValueGrid& grid, const DiscountedPayoffs& payoffs) {
    if (!grid.retained()) throw Error(ErrorCode::missing_grid, "grid export needs a retained grid");
    out << "k,t_k,z,price,J,f,g,continuation\n";
    for (int k = 0; k <= grid.n(); ++k) {
        const double t = grid.time(k);
        const auto values = grid.layer(k);
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double x = grid.price(k, i);
            out << k << ',' << csv::format_double(t) << ',' << grid.z_at(k, i) << ','
                << csv::format_double(x) << ',' << csv::format_double(values[i]) << ','
                << csv::format_double(payoffs.f(t, x)) << ',' << csv::format_double(payoffs.g(t, x))
                << ',';
            if (k < grid.n()) out << csv::format_double(grid.continuation(k)[i]);
            out << '\n';
        }
    }
}

}  // namespace dynkin
