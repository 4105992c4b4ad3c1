#include "dynkin/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dynkin/error.hpp"

namespace dynkin::oracle {
namespace {

using Path = std::vector<int>;  // moves in {-1, 0, +1}

struct Setup {
    double t0;
    double T;
    int n;
    double s;
    double dt;
    double log_step;
    double growth;  // exp(log_step)
    std::vector<double> p_values;

    double time(int k) const { return k == n ? T : t0 + (T - t0) * k / n; }

    double price(const Path& path, std::size_t len) const {
        long sum = 0;
        for (std::size_t i = 0; i < len; ++i) sum += path[i];
        return s * std::exp(log_step * static_cast<double>(sum));
    }

    // Law of the next move for parameter p, indexed by move + 1.
    std::array<double, 3> law(double p) const {
        const double up = p / (1.0 + growth);
        const double down = growth * up;
        return {down, 1.0 - up - down, up};
    }
};

Setup make_setup(const GridParams& params, const VolatilityInterval& interval, int p_grid,
                 int max_steps) {
    params.validate();
    interval.validate();
    if (params.n > max_steps) {
        throw Error(ErrorCode::size_limit_exceeded, "oracle supports n <= " + std::to_string(max_steps) +
                                                        ", got " + std::to_string(params.n));
    }
    if (p_grid < 2) {
        throw Error(ErrorCode::invalid_params, "p grid needs at least both endpoints");
    }
    Setup s{};
    s.t0 = params.t0;
    s.T = params.maturity;
    s.n = params.n;
    s.s = params.spot;
    s.dt = (params.maturity - params.t0) / params.n;
    s.log_step = interval.sigma_high * std::sqrt(s.dt);
    s.growth = std::exp(s.log_step);
    const double ratio = interval.sigma_low / interval.sigma_high;
    const double lo = ratio * ratio * std::exp(-4.0 * s.log_step);
    for (int j = 0; j < p_grid; ++j) {
        s.p_values.push_back(j + 1 == p_grid ? 1.0 : lo + (1.0 - lo) * j / (p_grid - 1));
    }
    return s;
}

// Value of the one-shot game in which the buyer (maximiser) and the seller
// (minimiser) each choose stop or continue; a joint stop pays the buyer's
// payoff.
double stage_game(double f, double g, double carry_on) {
    const std::array<std::array<double, 2>, 2> payment{{
        {f, f},         // buyer stops: seller stops / continues
        {g, carry_on},  // buyer continues
    }};
    double best = -std::numeric_limits<double>::infinity();
    for (const auto& row : payment) best = std::max(best, std::min(row[0], row[1]));
    return best;
}

double tree_value(const Setup& s, const DiscountedPayoffs& payoffs, Path& path) {
    const int k = static_cast<int>(path.size());
    const double t = s.time(k);
    const double x = s.price(path, path.size());
    if (k == s.n) return payoffs.f(t, x);

    std::array<double, 3> child{};
    for (int move = -1; move <= 1; ++move) {
        path.push_back(move);
        child[static_cast<std::size_t>(move + 1)] = tree_value(s, payoffs, path);
        path.pop_back();
    }
    double best = -std::numeric_limits<double>::infinity();
    for (double p : s.p_values) {
        const auto law = s.law(p);
        best = std::max(best, law[0] * child[0] + law[1] * child[1] + law[2] * child[2]);
    }
    return stage_game(payoffs.f(t, x), payoffs.g(t, x), s.dt * payoffs.h(t, x) + best);
}

// All move sequences of length `len`, in lexicographic order.
std::vector<Path> histories(int len) {
    std::vector<Path> out{Path{}};
    for (int k = 0; k < len; ++k) {
        std::vector<Path> longer;
        for (const auto& h : out) {
            for (int move = -1; move <= 1; ++move) {
                Path next = h;
                next.push_back(move);
                longer.push_back(std::move(next));
            }
        }
        out = std::move(longer);
    }
    return out;
}

}  // namespace

GameValue brute_force_value(const GridParams& params, const DiscountedPayoffs& payoffs,
                            const VolatilityInterval& interval, int p_grid) {
    const Setup s = make_setup(params, interval, p_grid, kMaxTreeSteps);
    Path path;
    path.reserve(static_cast<std::size_t>(s.n));
    return GameValue{tree_value(s, payoffs, path)};
}

GameValue strategy_enumeration_value(const GridParams& params, const DiscountedPayoffs& payoffs,
                                     const VolatilityInterval& interval, int p_grid) {
    const Setup s = make_setup(params, interval, p_grid, kMaxEnumerationSteps);

    // Decision points: every history of length < n.
    std::vector<Path> decision_points;
    for (int k = 0; k < s.n; ++k) {
        for (auto& h : histories(k)) decision_points.push_back(std::move(h));
    }
    const std::size_t H = decision_points.size();
    auto point_index = [&](const Path& path, std::size_t len) {
        for (std::size_t j = 0; j < H; ++j) {
            if (decision_points[j].size() == len &&
                std::equal(path.begin(), path.begin() + static_cast<long>(len), decision_points[j].begin())) {
                return j;
            }
        }
        throw Error(ErrorCode::index_out_of_range, "history not found");
    };

    const std::size_t m = s.p_values.size();
    double policies = 1.0;
    for (std::size_t j = 0; j < H; ++j) policies *= static_cast<double>(m);
    if (policies > 2e6) {
        throw Error(ErrorCode::size_limit_exceeded, "too many p-policies to enumerate; use a coarser p grid");
    }
    const std::size_t n_policies = static_cast<std::size_t>(policies);
    const std::size_t n_rules = std::size_t{1} << H;

    // Per full path: payoff data for every possible stopping depth.
    struct PathData {
        std::vector<std::size_t> point;  // decision point visited at depth k < n
        std::vector<double> f, g, running;
    };
    std::vector<PathData> paths;
    for (const auto& path : histories(s.n)) {
        PathData d;
        double acc = 0.0;
        for (int k = 0; k <= s.n; ++k) {
            const auto len = static_cast<std::size_t>(k);
            const double t = s.time(k);
            const double x = s.price(path, len);
            d.f.push_back(payoffs.f(t, x));
            d.g.push_back(payoffs.g(t, x));
            d.running.push_back(acc);  // sum of dt * h over depths < k
            if (k < s.n) {
                d.point.push_back(point_index(path, len));
                acc += s.dt * payoffs.h(t, x);
            }
        }
        paths.push_back(std::move(d));
    }
    const auto full_paths = histories(s.n);

    std::vector<std::size_t> choice(H, 0);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t policy = 0; policy < n_policies; ++policy) {
        std::size_t code = policy;
        for (std::size_t j = 0; j < H; ++j) {
            choice[j] = code % m;
            code /= m;
        }
        std::vector<double> prob(paths.size(), 1.0);
        for (std::size_t q = 0; q < paths.size(); ++q) {
            for (int k = 0; k < s.n; ++k) {
                const auto law = s.law(s.p_values[choice[paths[q].point[static_cast<std::size_t>(k)]]]);
                prob[q] *= law[static_cast<std::size_t>(full_paths[q][static_cast<std::size_t>(k)] + 1)];
            }
        }

        double buyer_best = -std::numeric_limits<double>::infinity();
        for (std::size_t buyer = 0; buyer < n_rules; ++buyer) {
            double seller_best = std::numeric_limits<double>::infinity();
            for (std::size_t seller = 0; seller < n_rules; ++seller) {
                double expected = 0.0;
                for (std::size_t q = 0; q < paths.size(); ++q) {
                    const auto& d = paths[q];
                    int tau = s.n;
                    int gamma = s.n;
                    for (int k = s.n - 1; k >= 0; --k) {
                        const std::size_t bit = std::size_t{1} << d.point[static_cast<std::size_t>(k)];
                        if (buyer & bit) tau = k;
                        if (seller & bit) gamma = k;
                    }
                    const int stop = std::min(tau, gamma);
                    const double pay = gamma < tau ? d.g[static_cast<std::size_t>(gamma)]
                                                   : d.f[static_cast<std::size_t>(tau)];
                    expected += prob[q] * (pay + d.running[static_cast<std::size_t>(stop)]);
                }
                seller_best = std::min(seller_best, expected);
            }
            buyer_best = std::max(buyer_best, seller_best);
        }
        best = std::max(best, buyer_best);
    }
    return GameValue{best};
}

}  // namespace dynkin::oracle
