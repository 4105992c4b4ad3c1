#include <doctest.h>

#include <cmath>
#include <random>

#include "dynkin/error.hpp"
#include "dynkin/uncertainty.hpp"

using namespace dynkin;

TEST_CASE("p_range") {
    CHECK(p_range({0.0, 0.4}, {0.02}).p_min == 0.0);
    CHECK(p_range({0.0, 0.4}, {0.02}).p_max == 1.0);
    CHECK(std::abs(p_range({0.4, 0.4}, {0.02}).p_min - 0.92311634638663578291) < 1e-15);
    CHECK(std::abs(p_range({0.2, 0.4}, {0.02}).p_min - 0.23077908659665894573) < 1e-15);
}

TEST_CASE("p_range validates the interval") {
    CHECK_THROWS_AS(p_range({0.5, 0.4}, {0.02}), Error);
    CHECK_THROWS_AS(p_range({-0.1, 0.4}, {0.02}), Error);
    CHECK_THROWS_AS(p_range({0.0, 0.0}, {0.02}), Error);
}

TEST_CASE("p_range is monotone in sigma_low") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double hi = 0.05 + u(rng);
        const double lo1 = hi * u(rng);
        const double lo2 = lo1 * u(rng);
        const LogStep a{0.5 * u(rng) + 1e-6};
        REQUIRE(p_range({lo2, hi}, a).p_min <= p_range({lo1, hi}, a).p_min);
    }
}

TEST_CASE("triple") {
    const auto frozen = triple(0.0, {0.02});
    CHECK(frozen.p_up == 0.0);
    CHECK(frozen.p_stay == 1.0);
    CHECK(frozen.p_down == 0.0);

    const auto full = triple(1.0, {0.02});
    CHECK(std::abs(full.p_up - 0.49500016666000026983) < 1e-15);
    CHECK(std::abs(full.p_down - 0.50499983333999973017) < 1e-15);
    CHECK(full.p_stay == 0.0);
    CHECK(full.p_up + full.p_down == doctest::Approx(1.0).epsilon(1e-15));

    CHECK_THROWS_AS(triple(-0.01, {0.02}), Error);
    CHECK_THROWS_AS(triple(1.01, {0.02}), Error);
    CHECK_THROWS_AS(triple(std::nan(""), {0.02}), Error);
}

TEST_CASE("triple is a martingale law for every p and a") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double p = u(rng);
        const LogStep a{2.0 * u(rng) + 1e-9};
        const auto law = triple(p, a);
        REQUIRE(law.p_up >= 0.0);
        REQUIRE(law.p_down >= 0.0);
        REQUIRE(law.p_stay >= 0.0);
        REQUIRE(std::abs(law.p_up + law.p_stay + law.p_down - 1.0) <= 1e-12);
        REQUIRE(std::abs(std::exp(a.a) * law.p_up + std::exp(-a.a) * law.p_down + law.p_stay - 1.0) <= 1e-12);
    }
}

TEST_CASE("normalised second moment lies in [sigma_low^2 e^{-4a}, sigma_high^2]") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        const double hi = 0.05 + u(rng);
        const VolatilityInterval I{hi * u(rng), hi};
        const LogStep a{0.3 * u(rng) + 1e-6};
        const auto range = p_range(I, a);
        const double p = range.p_min + (range.p_max - range.p_min) * u(rng);
        const auto law = triple(p, a);
        // E[(log return)^2] / dt = sigma_high^2 (P(up) + P(down)).
        const double moment = hi * hi * (law.p_up + law.p_down);
        REQUIRE(moment == doctest::Approx(hi * hi * p).epsilon(1e-12));
        REQUIRE(moment >= I.sigma_low * I.sigma_low * std::exp(-4 * a.a) * (1 - 1e-12));
        REQUIRE(moment <= hi * hi * (1 + 1e-12));
    }
}
