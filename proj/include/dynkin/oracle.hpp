#pragma once

#include "dynkin/lattice.hpp"
#include "dynkin/payoffs.hpp"
#include "dynkin/solver.hpp"
#include "dynkin/uncertainty.hpp"

// Brute-force reference valuations. Nothing here calls into the solver or
// the uncertainty module; the tree layout, transition probabilities and
// the optimisation over p are all re-derived locally.

namespace dynkin::oracle {

inline constexpr int kMaxTreeSteps = 10;
inline constexpr int kMaxEnumerationSteps = 2;

/// Backward induction on the full non-recombining history tree (3^n
/// leaves). Each node plays the one-shot stop/continue matrix game and
/// nature picks the best p from an evenly spaced grid of `p_grid` points
/// spanning the admissible range.
GameValue brute_force_value(const GridParams& params, const DiscountedPayoffs& payoffs,
                            const VolatilityInterval& interval, int p_grid);

/// sup over adapted p-policies, max over buyer stopping rules, min over
/// seller stopping rules of the expected game payment, by exhaustive
/// enumeration and explicit path sums. n <= 2.
GameValue strategy_enumeration_value(const GridParams& params, const DiscountedPayoffs& payoffs,
                                     const VolatilityInterval& interval, int p_grid);

}  // namespace dynkin::oracle
