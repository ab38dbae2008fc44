#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "pohst/numbertheory.hpp"
#include "test_util.hpp"

using namespace pohst;

// Reference decimals below were computed with mpmath at 30 digits.

TEST_CASE("hermite table") {
    CHECK(hermite_constant(1).value == 1.0);
    CHECK(hermite_constant(1).source == HermiteSource::exact_table);
    CHECK(hermite_constant(8).value == 2.0);
    CHECK(hermite_constant(8).source == HermiteSource::exact_table);
    CHECK(hermite_constant(24).value == 4.0);
    // gamma_d^d is rational for the table entries
    CHECK(std::pow(hermite_constant(2).value, 2) == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(std::pow(hermite_constant(3).value, 3) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(std::pow(hermite_constant(4).value, 4) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(std::pow(hermite_constant(5).value, 5) == doctest::Approx(8.0).epsilon(1e-14));
    CHECK(std::pow(hermite_constant(6).value, 6) == doctest::Approx(64.0 / 3.0).epsilon(1e-14));
    CHECK(std::pow(hermite_constant(7).value, 7) == doctest::Approx(64.0).epsilon(1e-14));
}

TEST_CASE("hermite estimate") {
    const auto nine = hermite_constant(9);
    CHECK(nine.source == HermiteSource::upper_estimate);
    CHECK(nine.value >= 2.0);
    CHECK(pohst::testing::close(nine.value, 2.24064645255761008687657166411));
    CHECK(pohst::testing::close(hermite_upper_estimate(24), 4.16936723658589668261150712475));
    CHECK(pohst::testing::close(hermite_upper_estimate(100), 13.4181617852872841869309082883));

    for (int d = 1; d <= 200; ++d) {
        const auto h = hermite_constant(d);
        const bool table = d <= 8 || d == 24;
        CHECK(h.source == (table ? HermiteSource::exact_table : HermiteSource::upper_estimate));
        CHECK(hermite_upper_estimate(d) >= h.value);
        if (d > 1) CHECK(hermite_upper_estimate(d) > hermite_upper_estimate(d - 1));
    }
    CHECK_THROWS_AS(hermite_constant(0), std::domain_error);
    CHECK_THROWS_AS(hermite_upper_estimate(-3), std::domain_error);
}

TEST_CASE("bound examples") {
    const auto two = RegulatorInput::with_table(2, 1.0);
    CHECK(two.hermite == 1.0);
    CHECK(std::fabs(remak_bound(two) - 3.38629436111989061883446424292) <= 1e-12);
    CHECK(std::fabs(improved_bound(two) - 3.38629436111989061883446424292) <= 1e-12);
    CHECK(remak_bound(two) == improved_bound(two));

    const auto three = RegulatorInput::with_table(3, 1.0);
    CHECK(std::fabs(remak_bound(three) - 7.29583686600432907418573571077) <= 1e-12);

    // R -> 0 leaves the first terms
    const auto tiny = RegulatorInput::with_gamma(2, 1e-300, 1.0);
    CHECK(remak_bound(tiny) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(improved_bound(tiny) == doctest::Approx(std::log(4.0)).epsilon(1e-12));

    const auto four = RegulatorInput::with_table(4, 1.0);
    CHECK(improved_bound(four) < remak_bound(four));
    CHECK(improved_bound(four) == doctest::Approx(2.0 * std::log(4.0) + regulator_term(four)).epsilon(1e-14));
}

TEST_CASE("compare_bounds examples") {
    CHECK(compare_bounds(RegulatorInput::with_table(2, 1.0)).improvement == 0.0);
    CHECK(std::fabs(compare_bounds(RegulatorInput::with_table(3, 1.0)).improvement - 1.90954250488443845535127146785) <=
          1e-12);
    CHECK(std::fabs(compare_bounds(RegulatorInput::with_table(10, 1.0)).improvement - 16.0943791243410037460075933323) <=
          1e-12);
    const auto r = compare_bounds(RegulatorInput::with_gamma(5, 2.0, 1.7));
    CHECK(r.hermite_source == HermiteSource::user);
    CHECK(r.hermite == 1.7);
}

TEST_CASE("improved never exceeds remak, m in 2..200") {
    pohst::testing::Rng rng(5);
    for (int m = 2; m <= 200; ++m) {
        for (int k = 0; k < 20; ++k) {
            const auto in = k == 0 ? RegulatorInput::with_table(m, 1.0)
                                   : RegulatorInput::with_gamma(m, rng.uniform(0.01, 100.0), rng.uniform(0.5, 50.0));
            const auto r = compare_bounds(in);
            CHECK(r.improved_bound <= r.remak_bound);
            CHECK(r.improvement >= 0.0);
            if (m == 2) {
                CHECK(r.improvement == 0.0);
                CHECK(r.improved_bound == r.remak_bound);
            } else {
                CHECK(r.improvement > 0.0);
                CHECK(r.improved_bound < r.remak_bound);
            }
        }
    }
}

TEST_CASE("bounds increase with the regulator and with gamma") {
    for (int m : {2, 3, 5, 10, 50}) {
        double last_r = 0.0;
        for (double R = 0.1; R < 100.0; R *= 1.5) {
            const double b = improved_bound(RegulatorInput::with_gamma(m, R, 1.3));
            CHECK(b > last_r);
            last_r = b;
        }
        double last_g = 0.0;
        for (double g = 0.5; g < 30.0; g *= 1.5) {
            const double b = remak_bound(RegulatorInput::with_gamma(m, 2.0, g));
            CHECK(b > last_g);
            last_g = b;
        }
    }
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(RegulatorInput::with_table(1, 1.0), std::domain_error);
    CHECK_THROWS_AS(RegulatorInput::with_table(3, 0.0), std::domain_error);
    CHECK_THROWS_AS(RegulatorInput::with_gamma(3, 1.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(RegulatorInput::with_gamma(3, std::nan(""), 1.0), std::domain_error);
    RegulatorInput raw;
    raw.m = 1;
    CHECK_THROWS_AS(remak_bound(raw), std::domain_error);
}
