#include "podq/enumerate.hpp"

#include <algorithm>
#include <string>

namespace podq {

EnumerationBoundError::EnumerationBoundError(long long n, long long bound)
    : std::out_of_range("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                        std::to_string(bound) + " (raise it with --max-enum-n)"),
      n_(n),
      bound_(bound) {}

void check_enumeration_bound(long long n, const EnumerationLimits& limits) {
    if (n < 0) throw DomainError("cannot enumerate partitions of negative n = " + std::to_string(n));
    if (n > limits.max_n) throw EnumerationBoundError(n, limits.max_n);
}

namespace {

enum class TopMultiplicity { Any, AtLeastTwo, ExactlyOne };

struct Constraints {
    int min_part = 1;
    bool exclude_two_mod_four = false;
    bool distinct_odd = false;
    bool top_even = false;
    TopMultiplicity top = TopMultiplicity::Any;
};

Constraints constraints_for(Family f) {
    Constraints c;
    switch (f) {
        case Family::Pod:
            c.distinct_odd = true;
            break;
        case Family::PodGt2:
            c.distinct_odd = true;
            c.min_part = 3;
            break;
        case Family::O1:
            c.distinct_odd = true;
            c.top_even = true;
            break;
        case Family::O2:
            c.distinct_odd = true;
            c.top_even = true;
            c.top = TopMultiplicity::AtLeastTwo;
            break;
        case Family::O3:
            c.distinct_odd = true;
            c.top_even = true;
            c.top = TopMultiplicity::ExactlyOne;
            break;
        case Family::C:
            c.exclude_two_mod_four = true;
            break;
    }
    return c;
}

// Depth-first generation; parts are chosen largest first, so the visiting
// order is lexicographically decreasing.
class Generator {
public:
    Generator(const Constraints& c, const PartitionVisitor& visit) : c_(c), visit_(visit) {}

    void run(int n) {
        stack_.clear();
        stack_.reserve(static_cast<std::size_t>(n));
        descend(n, n);
    }

private:
    void descend(int remaining, int max_part) {
        const std::size_t depth = stack_.size();
        if (remaining == 0) {
            if (depth == 1 && c_.top == TopMultiplicity::AtLeastTwo) return;
            if (depth == 0 && c_.top == TopMultiplicity::AtLeastTwo) return;
            visit_(Partition::from_sorted(stack_));
            return;
        }
        int hi = std::min(remaining, max_part);
        int lo = c_.min_part;
        if (depth == 1) {
            const int top = stack_.front();
            if (c_.top == TopMultiplicity::AtLeastTwo) lo = std::max(lo, top);
            if (c_.top == TopMultiplicity::ExactlyOne) hi = std::min(hi, top - 1);
        }
        for (int part = hi; part >= lo; --part) {
            if (c_.exclude_two_mod_four && part % 4 == 2) continue;
            if (depth == 0 && c_.top_even && part % 2 != 0) continue;
            if (c_.distinct_odd && part % 2 != 0 && depth > 0 && stack_.back() == part) continue;
            stack_.push_back(part);
            descend(remaining - part, part);
            stack_.pop_back();
        }
    }

    const Constraints& c_;
    const PartitionVisitor& visit_;
    std::vector<int> stack_;
};

}  // namespace

void for_each_partition(long long n, const PartitionVisitor& visit, const EnumerationLimits& limits) {
    check_enumeration_bound(n, limits);
    Constraints unrestricted;
    Generator(unrestricted, visit).run(static_cast<int>(n));
}

void for_each_in_family(long long n, Family family, const PartitionVisitor& visit,
                        const EnumerationLimits& limits) {
    check_enumeration_bound(n, limits);
    const Constraints c = constraints_for(family);
    Generator(c, visit).run(static_cast<int>(n));
}

std::vector<Partition> enumerate_partitions(long long n, const EnumerationLimits& limits) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); }, limits);
    return out;
}

std::vector<Partition> enumerate_family(long long n, Family family, const EnumerationLimits& limits) {
    std::vector<Partition> out;
    for_each_in_family(n, family, [&](const Partition& p) { out.push_back(p); }, limits);
    return out;
}

mpz_class count_family(long long n, Family family, const EnumerationLimits& limits) {
    if (n < 0) return 0;
    unsigned long count = 0;
    for_each_in_family(n, family, [&](const Partition&) { ++count; }, limits);
    return mpz_class(count);
}

}  // namespace podq
