#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "dynkin/payoffs.hpp"
#include "dynkin/solver.hpp"

namespace dynkin {

enum class NodeFlag : std::uint8_t { continue_ = 0, seller_stop = 1, buyer_stop = 2, both = 3 };

const char* flag_code(NodeFlag flag) noexcept;  // "C", "S", "B", "SB"

inline bool seller_stops(NodeFlag flag) noexcept {
    return (static_cast<std::uint8_t>(flag) & 1u) != 0;
}
inline bool buyer_stops(NodeFlag flag) noexcept {
    return (static_cast<std::uint8_t>(flag) & 2u) != 0;
}

/// Per-node flags laid out like the grid: flags[k][i] is node z_at(k, i).
struct RegionFlags {
    std::vector<std::vector<NodeFlag>> layers;
};

inline constexpr double kDefaultRegionTolerance = 1e-9;

/// A node is seller_stop when |J - g| <= tol * (1 + |g - f|) and buyer_stop
/// when |J - f| <= tol * (1 + |g - f|). Throws Error(missing_grid) if the
/// grid was solved without retain_grid.
RegionFlags classify(const ValueGrid& grid, const DiscountedPayoffs& payoffs,
                     double tol = kDefaultRegionTolerance);

/// Seller stopping region in stock-price coordinates.
///
/// Node prices on the lattice are discounted; the stock price of node
/// (k, z) is e^{r t_k} s e^{az}. In every layer the level {K} is
/// represented by the lowest node whose stock price is >= K.
struct StoppingRegion {
    struct Layer {
        int k = 0;
        double t = 0.0;
        std::optional<double> b;   // largest seller-stop stock price
        std::optional<int> k_node; // index of the node standing in for K
        bool above_strike = false; // some seller-stop node lies above k_node
        bool contiguous = true;    // seller-stop nodes >= K form one run from k_node
    };

    double strike = 0.0;
    double rate = 0.0;
    std::vector<Layer> layers;   // k = 0..n
    std::optional<double> T1;    // last time seller stops strictly above K
    std::optional<double> T2;    // last time the seller-stop set is nonempty

    /// Layers (k <= T1 layer) whose seller band above K is not a single run.
    std::vector<int> noncontiguous_layers() const;
};

StoppingRegion seller_boundary(const RegionFlags& flags, const ValueGrid& grid, double strike,
                               double rate);

/// k,t_k,z,price,flag for every node in the seller stopping region.
void write_region_csv(std::ostream& out, const RegionFlags& flags, const ValueGrid& grid,
                      const StoppingRegion& region);

/// t_k,b for every layer where b is defined.
void write_boundary_csv(std::ostream& out, const StoppingRegion& region);

}  // namespace dynkin
