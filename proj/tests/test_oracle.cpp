#include <doctest.h>

#include <cmath>
#include <random>

#include "dynkin/error.hpp"
#include "dynkin/oracle.hpp"
#include "dynkin/solver.hpp"
#include "test_support.hpp"

using namespace dynkin;
using namespace dynkin::testing;

TEST_CASE("trivial payoffs") {
    const VolatilityInterval I{0.1, 0.4};
    for (int n : {1, 3, 5}) {
        const GridParams params{0.0, 0.5, n, 100.0};
        CHECK(oracle::brute_force_value(params, constant_payoffs(4.0), I, 11).value == doctest::Approx(4.0));
        CHECK(oracle::brute_force_value(params, identity_payoffs(), I, 11).value ==
              doctest::Approx(100.0).epsilon(1e-13));
    }
    CHECK(oracle::strategy_enumeration_value({0.0, 0.5, 1, 100.0}, constant_payoffs(4.0), I, 5).value ==
          doctest::Approx(4.0));
}

TEST_CASE("tree matches the lattice on the n = 3 put") {
    const auto put = make_discounted(table_put());
    const GridParams params{0.0, 0.5, 3, 100.0};
    const VolatilityInterval I{0.0, 0.4};
    const double lattice = value(solve(params, put, I)).value;
    const double tree = oracle::brute_force_value(params, put, I, 101).value;
    CHECK(std::abs(lattice - tree) <= 1e-12);
}

TEST_CASE("n = 1 with f = g: all three routes agree") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 10; ++trial) {
        const auto inst = random_instance(rng);
        const auto pay = make_discounted(inst.spec);
        const DiscountedPayoffs tied{pay.f, pay.f, pay.h};
        const GridParams params{0.0, 0.5, 1, inst.spot};
        const VolatilityInterval I{inst.sigma_low, inst.sigma_high};
        const double lattice = value(solve(params, tied, I)).value;
        CHECK(std::abs(oracle::brute_force_value(params, tied, I, 21).value - lattice) <= 1e-12);
        CHECK(std::abs(oracle::strategy_enumeration_value(params, tied, I, 21).value - lattice) <= 1e-12);
    }
}

TEST_CASE("strategy enumeration matches the lattice") {
    const VolatilityInterval I{0.0, 0.4};
    const auto put = make_discounted(table_put());
    const GridParams one{0.0, 0.5, 1, 100.0};
    CHECK(std::abs(oracle::strategy_enumeration_value(one, put, I, 101).value - value(solve(one, put, I)).value) <=
          1e-12);

    const auto call = make_discounted(table_call());
    const GridParams two{0.0, 0.5, 2, 80.0};
    CHECK(std::abs(oracle::strategy_enumeration_value(two, call, I, 2).value - value(solve(two, call, I)).value) <=
          1e-12);
}

TEST_CASE("running payoff is handled by both oracles") {
    const DiscountedPayoffs pay{[](double t, double x) { return std::max(100.0 - x, 0.0) + t; },
                                [](double t, double x) { return std::max(100.0 - x, 0.0) + t + 3.0; },
                                [](double t, double x) { return 0.01 * x - t; }};
    const VolatilityInterval I{0.2, 0.5};
    for (int n : {1, 2}) {
        const GridParams params{0.1, 0.9, n, 97.0};
        const double lattice = value(solve(params, pay, I)).value;
        CHECK(std::abs(oracle::brute_force_value(params, pay, I, 2).value - lattice) <= 1e-12);
        CHECK(std::abs(oracle::strategy_enumeration_value(params, pay, I, 2).value - lattice) <= 1e-12);
    }
}

TEST_CASE("p grid coarsening does not move the tree value") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = random_instance(rng);
        const auto pay = make_discounted(inst.spec);
        const GridParams params{0.0, 1.0, 4, inst.spot};
        const VolatilityInterval I{inst.sigma_low, inst.sigma_high};
        const double fine = oracle::brute_force_value(params, pay, I, 101).value;
        const double coarse = oracle::brute_force_value(params, pay, I, 2).value;
        REQUIRE(std::abs(fine - coarse) <= 1e-12);
    }
}

TEST_CASE("tree equals lattice on random small instances") {
    std::mt19937_64 rng(107);
    for (int trial = 0; trial < 60; ++trial) {
        const auto inst = random_instance(rng);
        const auto pay = make_discounted(inst.spec);
        const int n = 1 + trial % 4;
        const GridParams params{0.0, 0.5, n, inst.spot};
        const VolatilityInterval I{inst.sigma_low, inst.sigma_high};
        const double lattice = value(solve(params, pay, I)).value;
        REQUIRE(std::abs(oracle::brute_force_value(params, pay, I, 101).value - lattice) <= 1e-9);
        if (n <= 2) {
            REQUIRE(std::abs(oracle::strategy_enumeration_value(params, pay, I, n == 1 ? 101 : 2).value - lattice) <=
                    1e-9);
        }
    }
}

TEST_CASE("size limits") {
    const auto put = make_discounted(table_put());
    auto code_of = [](auto fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::domain_error;
    };
    CHECK(code_of([&] { oracle::brute_force_value({0.0, 0.5, 11, 100.0}, put, {0.0, 0.4}, 2); }) ==
          ErrorCode::size_limit_exceeded);
    CHECK(code_of([&] { oracle::strategy_enumeration_value({0.0, 0.5, 3, 100.0}, put, {0.0, 0.4}, 2); }) ==
          ErrorCode::size_limit_exceeded);
    CHECK(code_of([&] { oracle::strategy_enumeration_value({0.0, 0.5, 2, 100.0}, put, {0.0, 0.4}, 101); }) ==
          ErrorCode::size_limit_exceeded);
    CHECK(code_of([&] { oracle::brute_force_value({0.0, 0.5, 2, 100.0}, put, {0.0, 0.4}, 1); }) ==
          ErrorCode::invalid_params);
}
