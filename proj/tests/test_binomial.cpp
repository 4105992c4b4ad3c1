#include <doctest.h>

#include <cmath>
#include <random>

#include "dynkin/binomial.hpp"
#include "dynkin/error.hpp"
#include "test_support.hpp"

using namespace dynkin;
using namespace dynkin::testing;

TEST_CASE("trivial payoffs") {
    for (int n : {1, 10, 201}) {
        const BinomialParams bp{0.3, {0.0, 1.0, n, 70.0}};
        CHECK(crr_game_price(bp, constant_payoffs(-2.5)).value == doctest::Approx(-2.5).epsilon(1e-14));
        CHECK(crr_game_price(bp, identity_payoffs()).value == doctest::Approx(70.0).epsilon(1e-12));
    }
}

TEST_CASE("published Black-Scholes comparator values") {
    const auto call = make_discounted(table_call());
    CHECK(std::abs(crr_game_price({0.4, {0.0, 0.5, 200, 80.0}}, call).value - 2.0625) < 5e-5);
    CHECK(std::abs(crr_game_price({0.4, {0.0, 0.5, 700, 90.0}}, call).value - 3.4968) < 5e-5);
    const auto put = make_discounted(table_put());
    // Reference column quotes 20.6 for the continuous model.
    CHECK(std::abs(crr_game_price({0.4, {0.0, 0.5, 1200, 80.0}}, put).value - 20.6) < 0.1);
}

TEST_CASE("grid layout and sandwich") {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = random_instance(rng);
        const auto pay = make_discounted(inst.spec);
        const BinomialParams bp{inst.sigma_high, {0.0, 0.5 + u(rng), 1 + static_cast<int>(60 * u(rng)), inst.spot}};
        const auto grid = crr_solve(bp, pay, {.retain_grid = true});
        const double c = 50.0 * u(rng) - 25.0;
        const auto moved = crr_solve(bp, shifted(pay, c), {.retain_grid = true});
        CHECK(grid.stride() == 2);
        for (int k = 0; k <= bp.params.n; ++k) {
            REQUIRE(grid.layer(k).size() == static_cast<std::size_t>(k + 1));
            const double t = grid.time(k);
            for (std::size_t i = 0; i < grid.width(k); ++i) {
                const double x = grid.price(k, i);
                REQUIRE(grid.z_at(k, i) == -k + 2 * static_cast<int>(i));
                REQUIRE(pay.f(t, x) <= grid.layer(k)[i] + 1e-12);
                REQUIRE(grid.layer(k)[i] <= pay.g(t, x) + 1e-12);
                REQUIRE(std::abs(moved.layer(k)[i] - grid.layer(k)[i] - c) <= 1e-9);
            }
        }
        CHECK(value(grid).value == crr_game_price(bp, pay).value);
    }
}

TEST_CASE("put under uncertainty agrees with the top-volatility tree") {
    const auto put = make_discounted(table_put());
    for (double s : {80.0, 100.0, 120.0}) {
        const double robust = value(solve({0.0, 0.5, 400, s}, put, {0.0, 0.4})).value;
        const double bs = crr_game_price({0.4, {0.0, 0.5, 400, s}}, put).value;
        CHECK(std::abs(robust - bs) <= 0.1);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(crr_game_price({0.0, {0.0, 0.5, 10, 100.0}}, constant_payoffs(1)), Error);
    const DiscountedPayoffs inverted{[](double, double) { return 1.0; }, [](double, double) { return 0.0; },
                                     [](double, double) { return 0.0; }};
    try {
        crr_game_price({0.3, {0.0, 0.5, 10, 100.0}}, inverted);
        FAIL("expected order violation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::order_violation);
    }
}
