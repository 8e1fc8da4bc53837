#include "doctest.h"

#include <optional>
#include <random>
#include <stdexcept>

#include "oracle.hpp"
#include "podq/named_series.hpp"
#include "podq/pochhammer.hpp"

using namespace podq;

namespace {

Series from_poly(const oracle::Poly& p) { return Series(p.size() - 1, p); }

// The direct route: build every term from scratch with pochhammer, invert
// and multiply, then add. Quadratic per term, so only used at small order.
Series naive_sum(const TermSpec& t, std::size_t order) {
    Series total(order);
    for (long long i = t.first_index;; ++i) {
        const long long deg = static_cast<long long>(t.monomial_step) * i + static_cast<long long>(t.monomial_offset);
        if (deg > static_cast<long long>(order)) break;
        Series term = Series::monomial(1, static_cast<std::size_t>(deg), order);
        for (const auto& s : t.numerator) term *= pochhammer(s, i, order);
        for (const auto& s : t.denominator) term *= series_invert(pochhammer(s, i, order));
        total += term;
    }
    total += Series::monomial(Integer(static_cast<long>(t.constant_shift)), 0, order);
    return total;
}

}  // namespace

TEST_CASE("small products") {
    CHECK(pochhammer(poch_finite(1, 1, 1, 0), std::nullopt, 8) == Series::one(8));
    CHECK(pochhammer(poch_finite(-1, 1, 2, 2), std::nullopt, 6) == from_poly({1, 1, 0, 1, 1, 0, 0}));
    // (1-q^2)(1-q^4)(1-q^6): the q^6 terms from the first two factors and the third cancel
    CHECK(pochhammer(poch_inf(1, 2, 2), std::nullopt, 6) == from_poly({1, 0, -1, 0, -1, 0, 0}));
    CHECK(pochhammer(poch_finite(1, 1, 1, 1), std::nullopt, 3) + pochhammer(poch_finite(-1, 1, 1, 1), std::nullopt, 3) ==
          Series::monomial(2, 0, 3));
}

TEST_CASE("products match the naive oracle") {
    for (int sign : {-1, 1}) {
        for (int a = 0; a <= 3; ++a) {
            for (int step = 1; step <= 4; ++step) {
                for (int k = 0; k <= 8; ++k) {
                    CHECK(pochhammer(poch_finite(sign, a, step, k), std::nullopt, 20) ==
                          from_poly(oracle::finite_product(sign, a, step, k, 20)));
                }
                if (a >= 1) {
                    // every factor past exponent 20 is 1 mod q^21
                    CHECK(pochhammer(poch_inf(sign, a, step), std::nullopt, 20) ==
                          from_poly(oracle::finite_product(sign, a, step, 25, 20)));
                }
            }
        }
    }
}

TEST_CASE("Euler's pentagonal number theorem") {
    const std::size_t N = 200;
    const Series s = pochhammer(poch_inf(1, 1, 1), std::nullopt, N);
    oracle::Poly expected(N + 1, 0);
    for (long long k = -20; k <= 20; ++k) {
        const long long e = k * (3 * k - 1) / 2;
        if (e >= 0 && e <= static_cast<long long>(N)) expected[e] += (k % 2 == 0) ? 1 : -1;
    }
    CHECK(s == from_poly(expected));
}

TEST_CASE("affine lengths") {
    const auto spec = poch_affine(-1, 1, 2, 1, 1);  // (-q;q^2)_{i+1}
    CHECK(pochhammer(spec, 1, 10) == from_poly(oracle::finite_product(-1, 1, 2, 2, 10)));
    CHECK_THROWS_AS(pochhammer(spec, std::nullopt, 10), DomainError);
    CHECK_THROWS_AS(pochhammer(poch_affine(1, 1, 1, 1, -3), 1, 10), DomainError);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(poch_inf(2, 1, 1).validate(), std::invalid_argument);
    CHECK_THROWS_AS(poch_inf(1, 1, 0).validate(), std::invalid_argument);
    Series s = Series::one(5);
    CHECK_THROWS_AS(divide_by_pochhammer(s, poch_finite(1, 0, 1, 2)), NotInvertibleError);
    CHECK(poch_inf(-1, 3, 2).to_string() == "(-q^3;q^2)_inf");
}

TEST_CASE("multiply then divide by a product is the identity") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        const Series s = from_poly(oracle::random_poly(rng, 30));
        Series t = s;
        const auto spec = poch_finite(rng() % 2 ? 1 : -1, 1 + rng() % 3, 1 + rng() % 3, rng() % 6);
        multiply_by_pochhammer(t, spec);
        CHECK(t == s * pochhammer(spec, std::nullopt, 30));
        divide_by_pochhammer(t, spec);
        CHECK(t == s);
    }
}

TEST_CASE("incremental sums match the per-term construction") {
    for (const auto& spec : {o1_term_spec(), o2_term_spec(), o3_term_spec(), lambda_term_spec(), ab1_term_spec(),
                             ab2_inner_term_spec()}) {
        for (std::size_t N : {0u, 1u, 7u, 40u}) {
            CAPTURE(N);
            CHECK(sum_ratio_terms(spec, N) == naive_sum(spec, N));
        }
    }
}

TEST_CASE("incremental sums handle shrinking and mixed lengths") {
    TermSpec t;
    t.numerator = {poch_affine(1, 1, 1, -1, 6), poch_inf(-1, 1, 1)};  // (q;q)_{6-i}
    t.denominator = {poch_affine(1, 2, 2, 2, 0), poch_finite(-1, 1, 3, 2)};
    t.monomial_step = 1;
    t.first_index = 0;
    t.constant_shift = 3;
    for (std::size_t N : {3u, 6u}) CHECK(sum_ratio_terms(t, N) == naive_sum(t, N));
    // (q;q)_{6-i} has negative length at i = 7
    CHECK_THROWS_AS(sum_ratio_terms(t, 12), DomainError);
}

TEST_CASE("term spec validation") {
    TermSpec t;
    t.monomial_step = 0;
    CHECK_THROWS(t.validate());
}
