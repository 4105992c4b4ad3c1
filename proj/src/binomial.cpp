#include "dynkin/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "dynkin/error.hpp"

namespace dynkin {

void BinomialParams::validate() const {
    params.validate();
    if (!(std::isfinite(sigma) && sigma > 0.0)) {
        throw Error(ErrorCode::invalid_params, "binomial sigma must be > 0, got " + std::to_string(sigma));
    }
}

ValueGrid crr_solve(const BinomialParams& bp, const DiscountedPayoffs& payoffs, SolveOptions options) {
    bp.validate();
    const GridParams& params = bp.params;
    const int n = params.n;
    const double dt = params.time_step();
    const LogStep a = step_size(params, bp.sigma);
    const double u = std::exp(a.a);
    const double d = 1.0 / u;
    const double q = (1.0 - d) / (u - d);

    ValueGrid grid(params, a, 2, options.retain_grid);
    std::vector<double> next(static_cast<std::size_t>(n) + 1);
    std::vector<double> cur(static_cast<std::size_t>(n) + 1);

    double worst_gap = -kOrderTolerance;
    std::optional<OrderViolation> worst;
    auto check = [&](int k, int z, double f, double g, double h) {
        if (!std::isfinite(f) || !std::isfinite(g) || !std::isfinite(h)) {
            std::ostringstream msg;
            msg << "payoff is not finite at node (k=" << k << ", z=" << z << ")";
            throw Error(ErrorCode::numeric_overflow, msg.str());
        }
        if (g - f < worst_gap) {
            worst_gap = g - f;
            worst = OrderViolation{k, z, f, g};
        }
    };

    const double T = layer_time(params, n);
    for (int i = 0; i <= n; ++i) {
        const int z = -n + 2 * i;
        const double x = node_value(params.spot, a, z);
        const double f = payoffs.f(T, x);
        check(n, z, f, payoffs.g(T, x), 0.0);
        next[static_cast<std::size_t>(i)] = f;
    }
    if (options.retain_grid) std::copy_n(next.begin(), n + 1, grid.layer(n).begin());

    for (int k = n - 1; k >= 0; --k) {
        const double t = layer_time(params, k);
        const std::span<double> cont_out =
            options.retain_grid ? grid.continuation(k) : std::span<double>{};
        for (int i = 0; i <= k; ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const int z = -k + 2 * i;
            const double x = node_value(params.spot, a, z);
            const double f = payoffs.f(t, x);
            const double g = payoffs.g(t, x);
            const double h = payoffs.h(t, x);
            check(k, z, f, g, h);
            const double cont = dt * h + q * next[idx + 1] + (1.0 - q) * next[idx];
            cur[idx] = std::max(f, std::min(g, cont));
            if (!cont_out.empty()) cont_out[idx] = cont;
        }
        if (options.retain_grid) std::copy_n(cur.begin(), k + 1, grid.layer(k).begin());
        std::swap(cur, next);
    }
    if (worst) throw Error(ErrorCode::order_violation, describe(*worst));
    if (!options.retain_grid) grid.layer(0)[0] = next[0];
    return grid;
}

GameValue crr_game_price(const BinomialParams& bp, const DiscountedPayoffs& payoffs) {
    return value(crr_solve(bp, payoffs));
}

}  // namespace dynkin
