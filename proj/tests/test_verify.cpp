#include "doctest.h"

#include <sstream>
#include <string>

#include "oracle.hpp"
#include "podq/verify.hpp"

using namespace podq;

#ifndef PODQ_TEST_DATA_DIR
#error "PODQ_TEST_DATA_DIR must be defined"
#endif

namespace {

const ReportEntry& row(const VerificationReport& r, const std::string& label) {
    for (const auto& e : r.entries) {
        if (e.label == label) return e;
    }
    FAIL("no row " << label);
    throw std::logic_error("unreachable");
}

std::string value(const ReportEntry& e, const std::string& key) {
    for (const auto& [k, v] : e.values) {
        if (k == key) return v;
    }
    return "<missing>";
}

}  // namespace

TEST_CASE("identity catalog") {
    CHECK(parse_identity("1.1") == IdentityTag::I11);
    CHECK(parse_identity("I13") == IdentityTag::I13);
    CHECK(parse_identity("17") == IdentityTag::I17);
    CHECK_THROWS(parse_identity("1.5"));
    CHECK(identity_info(IdentityTag::I13).max_offset() == 2);
    CHECK(identity_info(IdentityTag::I12).min_n == 5);
}

TEST_CASE("identity 1.1 at n_max = 5, both methods") {
    const auto r = verify_identity(IdentityTag::I11, 5, Method::Both);
    CHECK(r.passed());
    const auto& e = row(r, "n=5");
    CHECK(e.passed);
    CHECK(value(e, "lhs_enum") == "4");
    CHECK(value(e, "rhs_enum") == "4");
    CHECK(value(e, "lhs_series") == "4");
    CHECK(row(r, "n=1").informational);
}

TEST_CASE("identity 1.2 at n_max = 5 by enumeration") {
    const auto r = verify_identity(IdentityTag::I12, 5, Method::Enumeration);
    CHECK(r.passed());
    CHECK(value(row(r, "n=5"), "lhs") == "1");
    CHECK(value(row(r, "n=5"), "rhs") == "1");
    // rows below the validity range are recorded but never fail the report
    for (int n = 0; n < 5; ++n) CHECK(row(r, "n=" + std::to_string(n)).informational);
}

TEST_CASE("identity 1.3 at n_max = 4") {
    const auto r = verify_identity(IdentityTag::I13, 4, Method::Both);
    CHECK(r.passed());
    CHECK(value(row(r, "n=3"), "lhs_enum") == "2");
    CHECK(value(row(r, "n=4"), "lhs_enum") == "3");
}

TEST_CASE("identity values agree with brute-force counts") {
    for (int n = 2; n <= 18; ++n) {
        CHECK(oracle::count_if(n, oracle::is_o1) + oracle::count_if(n - 1, oracle::is_o1) ==
              oracle::count_if(n, oracle::is_pod));
        CHECK(oracle::count_if(n, oracle::is_pod) == oracle::count_if(n, oracle::is_c));
    }
    for (int n = 3; n <= 16; ++n) {
        CHECK(oracle::count_if(n + 2, oracle::is_o3) + oracle::count_if(n - 1, oracle::is_o3) ==
              oracle::count_if(n, oracle::is_pod));
    }
    for (int n = 5; n <= 18; ++n) {
        CHECK(oracle::count_if(n, oracle::is_o2) + oracle::count_if(n - 3, oracle::is_o2) ==
              oracle::count_if(n, oracle::is_podgt2));
    }
}

TEST_CASE("every identity passes to moderate bounds") {
    for (IdentityTag t : kAllIdentities) {
        CHECK(verify_identity(t, 30, Method::Both).passed());
        CHECK(verify_identity(t, 300, Method::Series).passed());
    }
}

TEST_CASE("identity enumeration respects the bound") {
    VerifyOptions opts;
    opts.limits.max_n = 20;
    CHECK_THROWS_AS(verify_identity(IdentityTag::I13, 19, Method::Enumeration, opts), EnumerationBoundError);
    CHECK_NOTHROW(verify_identity(IdentityTag::I13, 19, Method::Series, opts));
}

TEST_CASE("bijection audit T31 at n = 10") {
    const auto r = verify_bijection(Theorem::T31, 10);
    CHECK(r.passed());
    const auto& card = row(r, "cardinality");
    CHECK(card.passed);
    CHECK(value(card, "|C(n)|") == std::to_string(oracle::count_if(10, oracle::is_c)));
}

TEST_CASE("bijection audit T32 rejects n = 2") {
    CHECK_THROWS_AS(verify_bijection(Theorem::T32, 2), DomainError);
    CHECK(verify_bijection(Theorem::T32, 3).passed());
}

TEST_CASE("bijection audit over a range") {
    const auto r = verify_bijection_range(Theorem::T32, 3, 15);
    CHECK(r.passed());
    CHECK(r.entries.size() == 13);
}

TEST_CASE("single mapping audit") {
    const auto r = verify_mapping(Theorem::T31, Partition{11, 8, 5, 5, 5, 4, 3});
    CHECK(r.passed());
    CHECK(row(r, "forward").passed);
    CHECK(row(r, "round-trip").passed);
}

TEST_CASE("proof chain") {
    for (std::size_t order : {0u, 10u, 200u}) {
        CAPTURE(order);
        const auto r = verify_proof_chain(order);
        CHECK(r.passed());
        std::size_t checks = 0;
        for (const auto& e : r.entries) {
            if (!e.informational) {
                ++checks;
                CHECK(e.passed);
            }
        }
        CHECK(checks == 8);
    }
    const auto r = verify_proof_chain(60);
    for (const auto& e : r.entries) {
        if (e.informational) CHECK(value(e, "holds_for_n_from") == "2");
    }
}

TEST_CASE("count cross-checks") {
    const auto o1 = cross_check_counts(Family::O1, 20);
    CHECK(o1.passed());
    const int o1_expected[] = {1, 0, 1, 1, 2, 2};
    for (int n = 0; n <= 5; ++n) CHECK(value(row(o1, "n=" + std::to_string(n)), "enumeration") == std::to_string(o1_expected[n]));

    const auto c = cross_check_counts(Family::C, 20);
    CHECK(c.passed());
    CHECK(value(row(c, "n=5"), "series") == "4");

    const auto o2 = cross_check_counts(Family::O2, 6);
    CHECK(o2.passed());
    const int o2_expected[] = {0, 0, 0, 0, 1, 1, 1};
    for (int n = 0; n <= 6; ++n) CHECK(value(row(o2, "n=" + std::to_string(n)), "series") == std::to_string(o2_expected[n]));
}

TEST_CASE("b-file fixture") {
    const BFile b = load_bfile(std::string(PODQ_TEST_DATA_DIR) + "/pod_b.txt");
    REQUIRE(b.entries.size() == 31);
    // the fixture itself is checked against hand counts and brute force
    const int hand[] = {1, 1, 1, 2, 3, 4};
    for (int n = 0; n <= 5; ++n) CHECK(b.entries[n].value == hand[n]);
    for (int n = 0; n <= 20; ++n) CHECK(b.entries[n].value == oracle::count_if(n, oracle::is_pod));

    CHECK(oeis_cross_check(Family::Pod, b).passed());
    CHECK(oeis_cross_check(Family::C, b).passed());
    CHECK_FALSE(oeis_cross_check(Family::O1, b).passed());
}

TEST_CASE("b-file index offset") {
    // same values, but the file numbers them from 1
    std::istringstream in("1 1\n2 1\n3 1\n4 2\n5 3\n6 4\n");
    const BFile b = parse_bfile(in);
    CHECK_FALSE(oeis_cross_check(Family::Pod, b).passed());
    const auto r = oeis_cross_check(Family::Pod, b, -1);
    CHECK(r.passed());
    CHECK(r.entries.size() == 6);
    CHECK_THROWS_AS(oeis_cross_check(Family::Pod, b, -10), DomainError);
}

TEST_CASE("b-file parse errors carry the line") {
    std::istringstream in("# header\n0 1\nabc 3\n");
    try {
        parse_bfile(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    std::istringstream trailing("0 1 2\n");
    CHECK_THROWS_AS(parse_bfile(trailing), ParseError);
    std::istringstream missing("\n\n5\n");
    CHECK_THROWS_AS(parse_bfile(missing), ParseError);
}
