#pragma once

#include "dynkin/lattice.hpp"
#include "dynkin/payoffs.hpp"
#include "dynkin/solver.hpp"

namespace dynkin {

/// Single-volatility CRR lattice used as the Black-Scholes comparator.
struct BinomialParams {
    double sigma = 0.0;
    GridParams params;

    void validate() const;
};

/// Dynkin recursion on the discounted-price CRR tree u = e^{sigma sqrt(dt)},
/// d = 1/u, q = (1 - d)/(u - d). The returned grid has stride 2.
ValueGrid crr_solve(const BinomialParams& bp, const DiscountedPayoffs& payoffs,
                    SolveOptions options = {});

GameValue crr_game_price(const BinomialParams& bp, const DiscountedPayoffs& payoffs);

}  // namespace dynkin
