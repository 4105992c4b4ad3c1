#include "dynkin/payoffs.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dynkin/error.hpp"

namespace dynkin {

void GameOptionSpec::validate() const {
    auto fail = [](const char* field, double v, const char* rule) {
        std::ostringstream msg;
        msg << "option." << field << " must be " << rule << ", got " << v;
        throw Error(ErrorCode::invalid_params, msg.str());
    };
    if (!(std::isfinite(strike) && strike > 0.0)) fail("strike", strike, "> 0");
    if (!(std::isfinite(penalty) && penalty > 0.0)) fail("penalty", penalty, "> 0");
    if (!(std::isfinite(penalty_factor) && penalty_factor >= 1.0))
        fail("penalty_factor", penalty_factor, ">= 1");
    if (!(std::isfinite(rate) && rate >= 0.0)) fail("rate", rate, ">= 0");
}

DiscountedPayoffs make_discounted(const GameOptionSpec& spec) {
    spec.validate();
    const double K = spec.strike;
    const double r = spec.rate;
    const double C = spec.penalty_factor;
    const double delta = spec.penalty;

    auto intrinsic = [K, kind = spec.kind](double s) {
        return kind == OptionKind::put ? std::max(K - s, 0.0) : std::max(s - K, 0.0);
    };

    DiscountedPayoffs p;
    p.f = [=](double t, double x) {
        const double grow = std::exp(r * t);
        return intrinsic(grow * x) / grow;
    };
    p.g = [=](double t, double x) {
        const double grow = std::exp(r * t);
        return (C * intrinsic(grow * x) + delta) / grow;
    };
    p.h = [](double, double) { return 0.0; };
    return p;
}

DiscountedPayoffs constant_payoffs(double c) {
    auto fn = [c](double, double) { return c; };
    return DiscountedPayoffs{fn, fn, [](double, double) { return 0.0; }};
}

std::optional<OrderViolation> validate_order(const DiscountedPayoffs& p, const GridParams& params,
                                             LogStep a) {
    params.validate();
    std::optional<OrderViolation> worst;
    double worst_gap = -kOrderTolerance;
    for (int k = 0; k <= params.n; ++k) {
        const double t = layer_time(params, k);
        for (int z = -k; z <= k; ++z) {
            const double x = node_value(params.spot, a, z);
            const double f = p.f(t, x);
            const double g = p.g(t, x);
            if (g - f < worst_gap) {
                worst_gap = g - f;
                worst = OrderViolation{k, z, f, g};
            }
        }
    }
    return worst;
}

std::string describe(const OrderViolation& v) {
    std::ostringstream msg;
    msg << "payoff order g >= f violated at node (k=" << v.k << ", z=" << v.z << "): f=" << v.f
        << " g=" << v.g;
    return msg.str();
}

void require_order(const DiscountedPayoffs& p, const GridParams& params, LogStep a) {
    if (auto v = validate_order(p, params, a)) {
        throw Error(ErrorCode::order_violation, describe(*v));
    }
}

}  // namespace dynkin
