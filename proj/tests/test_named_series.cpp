#include "doctest.h"

#include <string>

#include "oracle.hpp"
#include "podq/enumerate.hpp"
#include "podq/named_series.hpp"

using namespace podq;

namespace {

const NamedSeries kAllNamed[] = {
    NamedSeries::Pod,       NamedSeries::C,           NamedSeries::PodGt2,      NamedSeries::O1,
    NamedSeries::O2,        NamedSeries::O3Sum,       NamedSeries::O3Closed,    NamedSeries::LambdaSum,
    NamedSeries::LambdaClosed, NamedSeries::Ab1Lhs,   NamedSeries::Ab1Rhs,      NamedSeries::Ab2Lhs,
    NamedSeries::Ab2Rhs};

}  // namespace

TEST_CASE("constant terms") {
    for (NamedSeries s : kAllNamed) {
        CAPTURE(std::string(series_name(s)));
        CHECK(named_gf(s, 0).coefficient(0) == (s == NamedSeries::O2 ? 0 : 1));
    }
}

TEST_CASE("names round-trip") {
    for (NamedSeries s : kAllNamed) CHECK(parse_series_name(series_name(s)) == s);
    CHECK_THROWS_AS(parse_series_name("nope"), ParseError);
}

TEST_CASE("small coefficients") {
    const Series pod = named_gf(NamedSeries::Pod, 5);
    const int expected[] = {1, 1, 1, 2, 3, 4};
    for (int n = 0; n <= 5; ++n) CHECK(pod.coefficient(n) == expected[n]);
    CHECK(coefficient(named_gf(NamedSeries::C, 10), 4) == 3);
    CHECK(coefficient(named_gf(NamedSeries::O1, 10), 1) == 0);
    const Series o3 = named_gf(NamedSeries::O3Closed, 6);
    const int o3_expected[] = {1, 0, 1, 1, 1, 1, 2};
    for (int n = 0; n <= 6; ++n) CHECK(o3.coefficient(n) == o3_expected[n]);
}

TEST_CASE("family generating functions match brute-force counts") {
    const std::size_t N = 22;
    for (Family f : kAllFamilies) {
        const Series s = named_gf(series_for_family(f), N);
        for (std::size_t n = 0; n <= N; ++n) {
            CAPTURE(family_name(f));
            CAPTURE(n);
            bool (*pred)(const oracle::Parts&) = nullptr;
            switch (f) {
                case Family::Pod: pred = oracle::is_pod; break;
                case Family::PodGt2: pred = oracle::is_podgt2; break;
                case Family::O1: pred = oracle::is_o1; break;
                case Family::O2: pred = oracle::is_o2; break;
                case Family::O3: pred = oracle::is_o3; break;
                case Family::C: pred = oracle::is_c; break;
            }
            CHECK(s.coefficient(n) == oracle::count_if(static_cast<int>(n), pred));
        }
    }
}

TEST_CASE("generating functions match the enumerator to n = 45") {
    for (Family f : kAllFamilies) {
        const Series s = named_gf(series_for_family(f), 45);
        for (long long n = 0; n <= 45; ++n) CHECK(s.coefficient(n) == count_family(n, f));
    }
}

TEST_CASE("(1+q) times the o1 series") {
    const Series s = named_gf(NamedSeries::O1, 10) * Series::binomial(-1, 1, 10);
    CHECK(s.coefficient(5) == 4);
}

TEST_CASE("sum forms equal their closed forms") {
    CHECK(o1_sum(10) == named_gf(NamedSeries::O1, 10));
    CHECK(o2_sum(0).coefficient(0) == 0);
    CHECK(o2_sum(60) == named_gf(NamedSeries::O2, 60));
    CHECK(ab2_inner_sum(20) == ab2_inner_closed(20));
    CHECK(named_gf(NamedSeries::O3Sum, 200) == named_gf(NamedSeries::O3Closed, 200));
    CHECK(named_gf(NamedSeries::LambdaSum, 200) == named_gf(NamedSeries::LambdaClosed, 200));
    CHECK(named_gf(NamedSeries::Ab1Lhs, 200) == named_gf(NamedSeries::Ab1Rhs, 200));
    CHECK(named_gf(NamedSeries::Ab2Lhs, 200) == named_gf(NamedSeries::Ab2Rhs, 200));
}

TEST_CASE("pod equals c to order 1000") {
    CHECK(named_gf(NamedSeries::Pod, 1000) == named_gf(NamedSeries::C, 1000));
}

TEST_CASE("q-binomial instances") {
    CHECK(qbinomial_check({-1, 1}, {1, 2}, 50).equal);
    CHECK(qbinomial_check({-1, 1}, {1, 4}, 50).equal);
    CHECK(qbinomial_check({-1, 1}, {1, 1}, 50).equal);
    CHECK(qbinomial_check({1, 1}, {1, 2}, 50).equal);
    CHECK(qbinomial_check({-1, 1}, {1, 2}, 30, 2).equal);
}

TEST_CASE("q-binomial with a = 0 reduces to 1/(q;q)_inf") {
    const auto r = qbinomial_check({0, 0}, {1, 1}, 40);
    CHECK(r.equal);
    CHECK_FALSE(r.first_mismatch.has_value());
    for (int n = 0; n <= 40; ++n) CHECK(r.lhs.coefficient(n) == oracle::partition_count(n));
}
