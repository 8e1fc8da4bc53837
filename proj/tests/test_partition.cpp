#include "doctest.h"

#include <random>
#include <vector>

#include "oracle.hpp"
#include "podq/partition.hpp"

using namespace podq;

namespace {

std::vector<int> as_vec(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

}  // namespace

TEST_CASE("construction canonicalizes") {
    CHECK(as_vec(Partition{2, 5, 5, 3}) == std::vector<int>{5, 5, 3, 2});
    Partition e{};
    CHECK(e.empty());
    CHECK(e.size() == 0);
    CHECK(e.largest() == 0);
    CHECK_THROWS_AS(Partition({3, 0}), DomainError);
    CHECK_THROWS_AS(Partition({-1}), DomainError);
}

TEST_CASE("multiplicity") {
    const Partition p{12, 12, 11, 11, 11, 8, 3};
    CHECK(p.multiplicity(11) == 3);
    CHECK(p.multiplicity(12) == 2);
    CHECK(Partition{5, 5, 2}.multiplicity(7) == 0);
    CHECK_THROWS_AS(p.multiplicity(0), DomainError);
    int total = 0;
    for (auto [v, m] : p.multiplicities()) total += v * m;
    CHECK(total == p.size());
}

TEST_CASE("parse accepts lists and exponent notation") {
    CHECK(Partition::parse("11,8,5,5,5,4,3") == Partition{11, 8, 5, 5, 5, 4, 3});
    CHECK(Partition::parse("12^2,11^3,8,3") == Partition{12, 12, 11, 11, 11, 8, 3});
    CHECK(Partition::parse("(3, 1, 4)") == Partition{4, 3, 1});
    CHECK(Partition::parse("[]").empty());
    CHECK(Partition::parse("").empty());
    CHECK_THROWS_AS(Partition::parse("3,x"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3,0"), ParseError);
    CHECK_THROWS_AS(Partition::parse("3^"), ParseError);
    CHECK(Partition{11, 8, 5}.to_string() == "11,8,5");
}

TEST_CASE("multiset union") {
    CHECK(multiset_union(Partition{5, 4, 3, 2, 1}, Partition{4, 4, 3, 3, 2}) ==
          Partition{5, 4, 4, 4, 3, 3, 3, 2, 2, 1});
    const Partition p{7, 3, 3};
    CHECK(multiset_union(p, Partition{}) == p);
    CHECK(multiset_union(Partition{3}, Partition{3}) == Partition{3, 3});
}

TEST_CASE("family membership examples") {
    CHECK(is_in_family(Partition{4, 3, 1}, Family::Pod));
    CHECK(is_in_family(Partition{4, 3, 1}, Family::O1));  // largest part 4 is even
    CHECK_FALSE(is_in_family(Partition{5, 3, 1}, Family::O1));
    CHECK(is_in_family(Partition{11, 8, 5, 5, 5, 4, 3}, Family::C));
    CHECK(is_in_family(Partition{10, 10, 8, 5, 4, 3}, Family::O1));
    CHECK(is_in_family(Partition{10, 10, 8, 5, 4, 3}, Family::O2));
    CHECK_FALSE(is_in_family(Partition{10, 10, 8, 5, 4, 3}, Family::O3));
}

TEST_CASE("empty partition conventions") {
    const Partition e;
    CHECK(is_in_family(e, Family::Pod));
    CHECK(is_in_family(e, Family::PodGt2));
    CHECK(is_in_family(e, Family::C));
    CHECK(is_in_family(e, Family::O1));
    CHECK_FALSE(is_in_family(e, Family::O2));
    CHECK(is_in_family(e, Family::O3));
}

TEST_CASE("family names round-trip") {
    for (Family f : kAllFamilies) {
        CHECK(parse_family(family_name(f)) == f);
        CHECK(parse_family(family_label(f)) == f);
    }
    CHECK_THROWS_AS(parse_family("nope"), ParseError);
}

TEST_CASE("membership agrees with the oracle predicates on every partition of n <= 22") {
    for (int n = 0; n <= 22; ++n) {
        for (const auto& parts : oracle::partitions(n)) {
            const Partition p(parts);
            CHECK(is_in_family(p, Family::Pod) == oracle::is_pod(parts));
            CHECK(is_in_family(p, Family::PodGt2) == oracle::is_podgt2(parts));
            CHECK(is_in_family(p, Family::C) == oracle::is_c(parts));
            CHECK(is_in_family(p, Family::O1) == oracle::is_o1(parts));
            CHECK(is_in_family(p, Family::O2) == oracle::is_o2(parts));
            CHECK(is_in_family(p, Family::O3) == oracle::is_o3(parts));
        }
    }
}

TEST_CASE("property: parse(to_string(p)) == p and union sizes add") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> len(0, 12), part(1, 30);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> a(len(rng)), b(len(rng));
        for (auto& v : a) v = part(rng);
        for (auto& v : b) v = part(rng);
        const Partition pa(a), pb(b);
        CHECK(Partition::parse(pa.to_string()) == pa);
        const Partition u = multiset_union(pa, pb);
        CHECK(u.size() == pa.size() + pb.size());
        CHECK(u == multiset_union(pb, pa));
        for (auto [v, m] : u.multiplicities()) CHECK(m == pa.multiplicity(v) + pb.multiplicity(v));
    }
}
