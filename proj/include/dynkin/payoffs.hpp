#pragma once

#include <functional>
#include <optional>
#include <string>

#include "dynkin/lattice.hpp"

namespace dynkin {

enum class OptionKind { put, call };

/// Game (Israeli) option on the undiscounted stock: the buyer may exercise
/// for fhat(S) = (K - S)^+ or (S - K)^+, the seller may cancel by paying
/// ghat(S) = C * fhat(S) + penalty.
struct GameOptionSpec {
    OptionKind kind = OptionKind::put;
    double strike = 0.0;
    double penalty = 0.0;
    double penalty_factor = 1.0;
    double rate = 0.0;

    void validate() const;
};

using PayoffFn = std::function<double(double t, double x)>;

/// Payoffs as functions of time and the discounted (martingale) price:
/// f is paid when the buyer stops, g when the seller cancels first, h is
/// the running reward rate. Callables must be pure and thread-safe.
struct DiscountedPayoffs {
    PayoffFn f;
    PayoffFn g;
    PayoffFn h;
};

/// f(t, x) = e^{-rt} fhat(e^{rt} x), g likewise, h = 0.
DiscountedPayoffs make_discounted(const GameOptionSpec& spec);

/// f = g = c, h = 0.
DiscountedPayoffs constant_payoffs(double c);

struct OrderViolation {
    int k = 0;
    int z = 0;
    double f = 0.0;
    double g = 0.0;
};

/// Returns the node with the most negative g - f if it is below -1e-12,
/// scanning every trinomial node (k, z) with |z| <= k <= n.
std::optional<OrderViolation> validate_order(const DiscountedPayoffs& p, const GridParams& params,
                                             LogStep a);

/// Throws Error(order_violation) carrying the worst node in its message.
void require_order(const DiscountedPayoffs& p, const GridParams& params, LogStep a);

std::string describe(const OrderViolation& v);

inline constexpr double kOrderTolerance = 1e-12;

}  // namespace dynkin
