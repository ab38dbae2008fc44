#include <doctest.h>

#include "pohst/elementary.hpp"
#include "test_util.hpp"

using namespace pohst::elementary;

namespace {
constexpr double tol = 1e-12;
constexpr int samples = 100000;
}  // namespace

TEST_CASE("bounded products on random samples") {
    pohst::testing::Rng rng(2024);
    for (int s = 0; s < samples; ++s) {
        const double a = rng.uniform(-1.0, 1.0);
        const double b = rng.uniform(-1.0, 1.0);
        const double ap = rng.uniform(0.0, 1.0);
        const double bn = rng.uniform(-1.0, 0.0);
        const double cn = rng.uniform(-1.0, 0.0);
        CHECK(single(a) <= 2.0 + tol);
        CHECK(pair(ap, bn) <= 1.0 + tol);
        CHECK(triple(a, b) <= 2.0 + tol);
        CHECK(quadruple(ap, bn, cn) <= 1.0 + tol);
    }
}

TEST_CASE("bounded products at the box corners") {
    for (double a : {-1.0, 0.0, 1.0}) {
        CHECK(single(a) <= 2.0);
        for (double b : {-1.0, 0.0, 1.0}) CHECK(triple(a, b) <= 2.0);
    }
    for (double a : {0.0, 1.0})
        for (double b : {-1.0, 0.0})
            for (double c : {-1.0, 0.0}) {
                CHECK(pair(a, b) <= 1.0);
                CHECK(quadruple(a, b, c) <= 1.0);
            }
}

TEST_CASE("triple attains 2 exactly at (0,-1) and (-1,0)") {
    CHECK(triple(0.0, -1.0) == 2.0);
    CHECK(triple(-1.0, 0.0) == 2.0);
    // and only there on a fine grid
    for (int p = 0; p <= 200; ++p) {
        for (int q = 0; q <= 200; ++q) {
            const double a = -1.0 + p / 100.0, b = -1.0 + q / 100.0;
            const bool maximizer = (p == 100 && q == 0) || (p == 0 && q == 100);
            if (!maximizer) CHECK(triple(a, b) < 2.0);
        }
    }
}

TEST_CASE("sign exchanges on random samples") {
    pohst::testing::Rng rng(4242);
    for (int s = 0; s < samples; ++s) {
        const double a = rng.uniform(0.0, 1.0);
        const double b = rng.uniform(0.0, 1.0);
        const double c = rng.uniform(0.0, 1.0);
        CHECK(exchange1_lower(a) <= exchange1_upper(a) + tol);
        CHECK(exchange2_lower(a, b) <= exchange2_upper(a, b) + tol);
        CHECK(exchange3_lower(a, b, c) <= exchange3_upper(a, b, c) + tol);
    }
}
