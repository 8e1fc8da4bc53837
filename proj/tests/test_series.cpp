#include "doctest.h"

#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "podq/series.hpp"

using namespace podq;

namespace {

Series from_poly(const oracle::Poly& p) { return Series(p.size() - 1, p); }

Series random_series(std::mt19937_64& rng, std::size_t order) { return from_poly(oracle::random_poly(rng, order)); }

// Constant term forced to +-1 so the series is a unit.
Series random_unit(std::mt19937_64& rng, std::size_t order) {
    auto p = oracle::random_poly(rng, order);
    p[0] = (rng() & 1) ? 1 : -1;
    return from_poly(p);
}

}  // namespace

TEST_CASE("addition") {
    const Series a = Series::binomial(-1, 1, 4);  // 1+q
    const Series b = Series::binomial(1, 1, 4);   // 1-q
    CHECK(a + b == Series::monomial(2, 0, 4));
    CHECK(a + Series(4) == a);
}

TEST_CASE("multiplication") {
    const Series a = Series::binomial(-1, 1, 5);
    const Series b = Series::binomial(1, 1, 5);
    CHECK(a * b == Series::binomial(1, 2, 5));
    CHECK(a * Series::one(5) == a);
}

TEST_CASE("orders combine by minimum") {
    const Series a = Series::one(3), b = Series::one(7);
    CHECK((a + b).order() == 3);
    CHECK((a * b).order() == 3);
    CHECK(series_add(b, a).order() == 3);
    CHECK_THROWS_AS(a.truncated(4), std::out_of_range);
    CHECK_THROWS_AS(Series(3, {1, 2}), std::invalid_argument);
}

TEST_CASE("coefficient access never reads past the order") {
    const Series s = Series::one(0);
    CHECK(coefficient(s, 0) == 1);
    CHECK_THROWS_AS(s.coefficient(1), std::out_of_range);
}

TEST_CASE("geometric series") {
    const std::size_t N = 40;
    const Series g = series_invert(Series::binomial(1, 1, N));
    for (std::size_t n = 0; n <= N; ++n) CHECK(g.coefficient(n) == 1);

    const Series h = series_invert(Series::binomial(-1, 3, N));
    for (std::size_t n = 0; n <= N; ++n) {
        const int expected = n % 3 != 0 ? 0 : ((n / 3) % 2 == 0 ? 1 : -1);
        CHECK(h.coefficient(n) == expected);
    }
}

TEST_CASE("invert is an involution on (q;q)_5") {
    const std::size_t N = 30;
    Series s = Series::one(N);
    for (std::size_t j = 1; j <= 5; ++j) s.multiply_binomial(1, j);
    CHECK(series_invert(series_invert(s)) == s);
}

TEST_CASE("invert rejects non-units") {
    CHECK_THROWS_AS(series_invert(Series(5)), NotInvertibleError);
    CHECK_THROWS_AS(series_invert(Series::monomial(2, 0, 5)), NotInvertibleError);
    Series s = Series::one(5);
    CHECK_THROWS_AS(s.divide_binomial(1, 0), NotInvertibleError);
}

TEST_CASE("binomial multiply and divide are inverse and match convolution") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Series s = random_series(rng, 25);
        for (int sign : {-1, 1}) {
            for (std::size_t e : {1u, 2u, 5u, 25u, 30u}) {
                Series t = s;
                t.multiply_binomial(sign, e);
                CHECK(t == s * Series::binomial(sign, e, 25));
                t.divide_binomial(sign, e);
                CHECK(t == s);
            }
        }
    }
}

TEST_CASE("shift") {
    const Series s = Series::binomial(1, 1, 5).shifted(2);  // q^2 - q^3
    CHECK(s == from_poly({0, 0, 1, -1, 0, 0}));
}

TEST_CASE("property: ring laws on random series") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t N = 1 + rng() % 30;
        const Series a = random_series(rng, N), b = random_series(rng, N), c = random_series(rng, N);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Series(N));
        CHECK(a + (-a) == Series(N));
        CHECK(a * Series::one(N) == a);
        CHECK(a * Integer(3) == a + a + a);
        CHECK(a * b == from_poly(oracle::poly_mul({a.coeffs().begin(), a.coeffs().end()},
                                                  {b.coeffs().begin(), b.coeffs().end()}, N)));
    }
}

TEST_CASE("property: invert(s) * s == 1 for units") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t N = rng() % 40;
        const Series s = random_unit(rng, N);
        const Series inv = series_invert(s);
        CHECK(s * inv == Series::one(N));
        CHECK(inv * s == Series::one(N));
        CHECK(series_invert(inv) == s);
    }
}

TEST_CASE("first_difference") {
    const Series a = Series::one(5);
    Series b = a;
    CHECK_FALSE(first_difference(a, b).has_value());
    b += Series::monomial(1, 3, 5);
    REQUIRE(first_difference(a, b).has_value());
    CHECK(*first_difference(a, b) == 3);
}
