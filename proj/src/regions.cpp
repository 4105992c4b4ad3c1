#include "dynkin/regions.hpp"

#include <cmath>
#include <ostream>

#include "dynkin/csv.hpp"
#include "dynkin/error.hpp"

namespace dynkin {

const char* flag_code(NodeFlag flag) noexcept {
    switch (flag) {
        case NodeFlag::seller_stop: return "S";
        case NodeFlag::buyer_stop: return "B";
        case NodeFlag::both: return "SB";
        case NodeFlag::continue_: break;
    }
    return "C";
}

RegionFlags classify(const ValueGrid& grid, const DiscountedPayoffs& payoffs, double tol) {
    if (!grid.retained()) {
        throw Error(ErrorCode::missing_grid, "region extraction needs a grid solved with retain_grid");
    }
    RegionFlags flags;
    flags.layers.resize(static_cast<std::size_t>(grid.n()) + 1);
    for (int k = 0; k <= grid.n(); ++k) {
        const double t = grid.time(k);
        const auto values = grid.layer(k);
        auto& out = flags.layers[static_cast<std::size_t>(k)];
        out.resize(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double x = grid.price(k, i);
            const double f = payoffs.f(t, x);
            const double g = payoffs.g(t, x);
            // Scaled by the penalty gap, not by |g|: far out on the lattice
            // |g| is huge while J, f and g are still resolved to a few ulp.
            const double band = tol * (1.0 + std::abs(g - f));
            const bool seller = std::abs(values[i] - g) <= band;
            const bool buyer = std::abs(values[i] - f) <= band;
            out[i] = static_cast<NodeFlag>((seller ? 1u : 0u) | (buyer ? 2u : 0u));
        }
    }
    return flags;
}

StoppingRegion seller_boundary(const RegionFlags& flags, const ValueGrid& grid, double strike,
                               double rate) {
    if (flags.layers.size() != static_cast<std::size_t>(grid.n()) + 1) {
        throw Error(ErrorCode::index_out_of_range, "flags do not match the grid");
    }
    StoppingRegion region;
    region.strike = strike;
    region.rate = rate;
    region.layers.reserve(flags.layers.size());

    for (int k = 0; k <= grid.n(); ++k) {
        const auto& row = flags.layers[static_cast<std::size_t>(k)];
        StoppingRegion::Layer layer;
        layer.k = k;
        layer.t = grid.time(k);
        const double grow = std::exp(rate * layer.t);

        for (std::size_t i = 0; i < row.size(); ++i) {
            if (grow * grid.price(k, i) >= strike * (1.0 - 1e-12)) {
                layer.k_node = static_cast<int>(i);
                break;
            }
        }

        bool in_run = layer.k_node.has_value();
        for (std::size_t i = 0; i < row.size(); ++i) {
            const bool stop = seller_stops(row[i]);
            if (stop) layer.b = grow * grid.price(k, i);  // prices increase with i
            if (!layer.k_node || static_cast<int>(i) < *layer.k_node) continue;
            if (stop && static_cast<int>(i) > *layer.k_node) layer.above_strike = true;
            if (stop && !in_run) layer.contiguous = false;
            if (!stop) in_run = false;
        }

        if (layer.b) region.T2 = layer.t;
        if (layer.above_strike) region.T1 = layer.t;
        region.layers.push_back(layer);
    }
    return region;
}

std::vector<int> StoppingRegion::noncontiguous_layers() const {
    std::vector<int> out;
    if (!T1) return out;
    for (const auto& layer : layers) {
        if (layer.t > *T1) break;
        if (!layer.contiguous) out.push_back(layer.k);
    }
    return out;
}

void write_region_csv(std::ostream& out, const RegionFlags& flags, const ValueGrid& grid,
                      const StoppingRegion& region) {
    out << "k,t_k,z,price,flag\n";
    for (int k = 0; k <= grid.n(); ++k) {
        const double t = grid.time(k);
        const double grow = std::exp(region.rate * t);
        const auto& row = flags.layers[static_cast<std::size_t>(k)];
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (!seller_stops(row[i])) continue;
            out << k << ',' << csv::format_double(t) << ',' << grid.z_at(k, i) << ','
                << csv::format_double(grow * grid.price(k, i)) << ',' << flag_code(row[i]) << '\n';
        }
    }
}

void write_boundary_csv(std::ostream& out, const StoppingRegion& region) {
    out << "t_k,b\n";
    for (const auto& layer : region.layers) {
        if (layer.b) out << csv::format_double(layer.t) << ',' << csv::format_double(*layer.b) << '\n';
    }
}

}  // namespace dynkin
