#include <doctest.h>

#include <stdexcept>

#include "pohst/triangle.hpp"
#include "test_util.hpp"

using namespace pohst;
using pohst::testing::close;

TEST_CASE("eval_term examples") {
    CHECK(eval_term(Vector({-1.0}), {1, 1}) == 2.0);
    CHECK(eval_term(Vector({0.5, -0.5}), {1, 2}) == 1.25);
    CHECK(eval_term(Vector({0.0, 0.9}), {1, 2}) == 1.0);
}

TEST_CASE("eval_term rejects indices outside the triangle") {
    const Vector v({0.5, -0.5});
    CHECK_THROWS_AS(eval_term(v, {0, 1}), std::out_of_range);
    CHECK_THROWS_AS(eval_term(v, {2, 1}), std::out_of_range);
    CHECK_THROWS_AS(eval_term(v, {1, 3}), std::out_of_range);
}

TEST_CASE("eval_f examples") {
    CHECK(eval_f(Vector({0.0, 0.0, 0.0})) == 1.0);
    CHECK(eval_f(Vector({-1.0, 0.0, -1.0})) == 4.0);
    CHECK(eval_f(Vector({0.5, -0.5})) == doctest::Approx(0.9375).epsilon(1e-15));
}

TEST_CASE("Vector enforces the hypercube") {
    CHECK_THROWS_AS(Vector(std::vector<double>{}), std::invalid_argument);
    CHECK_THROWS_AS(Vector({1.5}), std::invalid_argument);
    CHECK_THROWS_AS(Vector({-1.0000001}), std::invalid_argument);
    CHECK_NOTHROW(Vector({-1.0, 1.0}));
}

TEST_CASE("negate_abs") {
    CHECK(negate_abs(Vector({0.5, -0.5})) == Vector({-0.5, -0.5}));
    CHECK(negate_abs(Vector({-1.0, -1.0})) == Vector({-1.0, -1.0}));
    const auto z = negate_abs(Vector({0.0, 0.3, -0.7}));
    CHECK(z.at(1) == 0.0);
    CHECK(z.at(2) == -0.3);
    CHECK(z.at(3) == -0.7);
    CHECK(negate_abs(z) == z);
}

TEST_CASE("product_sign examples") {
    CHECK(product_sign(SignPattern::parse("-,+,-"), {1, 3}) == Sign::positive);
    CHECK(product_sign(SignPattern::parse("-,+"), {1, 2}) == Sign::negative);
    const auto all_plus = SignPattern::parse("+,+,+,+");
    for (int i = 1; i <= 4; ++i)
        for (int j = i; j <= 4; ++j) CHECK(product_sign(all_plus, {i, j}) == Sign::positive);
    CHECK_THROWS_AS(product_sign(all_plus, {1, 5}), std::out_of_range);
}

TEST_CASE("SignPattern parsing") {
    CHECK(SignPattern::parse("-,+,-").to_ints() == std::vector<int>{-1, 1, -1});
    CHECK(SignPattern::parse("-").size() == 1);
    CHECK(SignPattern::parse("-,+,-").to_string() == "-,+,-");
    CHECK_THROWS_AS(SignPattern::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(SignPattern::parse("-,,+"), std::invalid_argument);
    CHECK_THROWS_AS(SignPattern::parse("-,0"), std::invalid_argument);
    const int bad[] = {1, 0};
    CHECK_THROWS_AS(SignPattern::from_ints(bad), std::invalid_argument);
    CHECK_THROWS_AS(SignPattern::of(Vector({0.5, 0.0})), std::invalid_argument);
    CHECK(SignPattern::from_mask(3, 0b101) == SignPattern::parse("-,+,-"));
}

TEST_CASE("noncanonical_set examples") {
    SUBCASE("all negative is empty") {
        for (int n = 1; n <= 12; ++n) {
            CHECK(noncanonical_set(SignPattern::from_mask(n, (std::uint64_t{1} << n) - 1)).empty());
        }
    }
    SUBCASE("(-,+)") {
        const auto J = noncanonical_set(SignPattern::parse("-,+"));
        REQUIRE(J.size() == 2);
        CHECK(J.sign_of({2, 2}) == Sign::positive);
        CHECK(J.sign_of({1, 2}) == Sign::negative);
        CHECK_FALSE(J.contains({1, 1}));
        CHECK(J.negative_count() == 1);
    }
    SUBCASE("(+,+)") {
        const auto J = noncanonical_set(SignPattern::parse("+,+"));
        REQUIRE(J.size() == 2);
        CHECK(J.sign_of({1, 1}) == Sign::positive);
        CHECK(J.sign_of({2, 2}) == Sign::positive);
        CHECK_FALSE(J.contains({1, 2}));
    }
}

TEST_CASE("members of J come out in construction order") {
    const auto J = noncanonical_set(SignPattern::parse("+,-,+,+,-,+"));
    for (std::size_t k = 1; k < J.size(); ++k) CHECK(prec_less(J.members()[k - 1].index, J.members()[k].index));
}

TEST_CASE("split_at_zeros examples") {
    const auto a = split_at_zeros(Vector({0.5, 0.0, -1.0}));
    REQUIRE(a.size() == 2);
    CHECK(a[0] == Vector({0.5}));
    CHECK(a[1] == Vector({-1.0}));
    CHECK(split_at_zeros(Vector({0.0, 0.0})).empty());
    const auto c = split_at_zeros(Vector({-1.0, 0.0, -1.0, 0.0, -1.0}));
    REQUIRE(c.size() == 3);
    double product = 1.0;
    for (const auto& s : c) product *= eval_f(s);
    CHECK(product == 8.0);
    CHECK(eval_f(Vector({-1.0, 0.0, -1.0, 0.0, -1.0})) == 8.0);
}

// Oracle: the sign of the product shows up directly in the term value,
// a_(i,j) < 1 iff x_i...x_j > 0, for any nonzero magnitudes.
TEST_CASE("product sign agrees with the numeric term") {
    pohst::testing::Rng rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = rng.integer(1, 10);
        const auto v = rng.nonzero_vector(n);
        const auto p = SignPattern::of(v);
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                const double a = eval_term(v, {i, j});
                const Sign s = product_sign(p, {i, j});
                if (s == Sign::positive) {
                    CHECK(a < 1.0);
                } else {
                    CHECK(a > 1.0);
                }
            }
        }
    }
}

TEST_CASE("J membership is the complement of the canonical sign") {
    for (int n = 1; n <= 9; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            const auto p = SignPattern::from_mask(n, mask);
            const auto J = noncanonical_set(p);
            for (int i = 1; i <= n; ++i) {
                for (int j = i; j <= n; ++j) {
                    const bool canonical = product_sign(p, {i, j}) == parity_sign(i + j + 1);
                    CHECK(J.contains({i, j}) != canonical);
                    CHECK(signed_term(p, {i, j}).noncanonical == J.contains({i, j}));
                }
            }
        }
    }
}

TEST_CASE("canonical terms agree with the mirrored vector exactly") {
    pohst::testing::Rng rng(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = rng.integer(1, 10);
        const auto v = rng.nonzero_vector(n);
        const auto mirrored = negate_abs(v);
        const auto J = noncanonical_set(SignPattern::of(v));
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) {
                if (!J.contains({i, j})) CHECK(eval_term(v, {i, j}) == eval_term(mirrored, {i, j}));
            }
        }
    }
}

TEST_CASE("f factors over zero-free segments") {
    pohst::testing::Rng rng(13);
    for (int trial = 0; trial < 5000; ++trial) {
        const int n = rng.integer(1, 12);
        std::vector<double> x(static_cast<std::size_t>(n));
        for (auto& c : x) c = rng.integer(0, 3) == 0 ? 0.0 : rng.uniform(-1.0, 1.0);
        const Vector v(x);
        double product = 1.0;
        for (const auto& s : split_at_zeros(v)) product *= eval_f(s);
        CHECK(close(eval_f(v), product));
    }
}

TEST_CASE("prec_less is a strict total order matching the row sweep") {
    const int n = 7;
    std::vector<TermIndex> sweep;  // rows bottom-up, each row right to left
    for (int j = 1; j <= n; ++j)
        for (int i = j; i >= 1; --i) sweep.push_back({i, j});
    for (std::size_t a = 0; a < sweep.size(); ++a) {
        CHECK_FALSE(prec_less(sweep[a], sweep[a]));
        for (std::size_t b = 0; b < sweep.size(); ++b) {
            if (a == b) continue;
            CHECK(prec_less(sweep[a], sweep[b]) == (a < b));
            CHECK(prec_less(sweep[a], sweep[b]) != prec_less(sweep[b], sweep[a]));
        }
    }
}
