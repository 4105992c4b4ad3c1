#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "dynkin/lattice.hpp"
#include "dynkin/payoffs.hpp"
#include "dynkin/uncertainty.hpp"

namespace dynkin {

/// Triangular array of lattice values J_k(z), k = 0..n.
///
/// Layer k holds the nodes z = -k, -k + stride, ..., k. The trinomial
/// scheme uses stride 1 (2k + 1 nodes); the binomial comparator uses
/// stride 2 (k + 1 nodes). When only the price is needed the solver keeps
/// the root layer alone and `retained()` is false.
class ValueGrid {
public:
    ValueGrid() = default;
    ValueGrid(GridParams params, LogStep a, int stride, bool retain);

    const GridParams& params() const noexcept { return params_; }
    LogStep step() const noexcept { return a_; }
    int n() const noexcept { return params_.n; }
    int stride() const noexcept { return stride_; }
    bool retained() const noexcept { return retained_; }

    std::size_t width(int k) const noexcept { return static_cast<std::size_t>(2 * k / stride_ + 1); }
    int z_at(int k, std::size_t i) const noexcept { return -k + stride_ * static_cast<int>(i); }
    double price(int k, std::size_t i) const noexcept { return node_value(params_.spot, a_, z_at(k, i)); }
    double time(int k) const { return layer_time(params_, k); }

    /// Values of layer k. Requires retained() or k == 0.
    std::span<const double> layer(int k) const;
    std::span<double> layer(int k);
    /// Continuation values of layer k < n. Requires retained().
    std::span<const double> continuation(int k) const;
    std::span<double> continuation(int k);

    double root() const { return layer(0)[0]; }

private:
    std::size_t offset(int k) const;

    GridParams params_{};
    LogStep a_{};
    int stride_ = 1;
    bool retained_ = false;
    std::vector<double> values_;
    std::vector<double> continuation_;
};

struct GameValue {
    double value = 0.0;
};

struct SolveOptions {
    bool retain_grid = false;
};

/// Worst case over p in {p_min, 1} of the one-step expectation of the
/// next layer at node z. `next_layer` holds J_{k+1}(-(k+1)..k+1).
double continuation(std::span<const double> next_layer, int z, const PRange& range, LogStep a);

/// Backward recursion J_k(z) = max(f, min(g, dt * h + continuation)) on the
/// trinomial lattice with spacing sigma_high * sqrt(dt).
ValueGrid solve(const GridParams& params, const DiscountedPayoffs& payoffs,
                const VolatilityInterval& interval, SolveOptions options = {});

GameValue value(const ValueGrid& grid);

/// Writes one row per node: k,t_k,z,price,J,f,g,continuation. The
/// continuation field is empty on the terminal layer.
void write_grid_csv(std::ostream& out, const ValueGrid& grid, const DiscountedPayoffs& payoffs);

}  // namespace dynkin
