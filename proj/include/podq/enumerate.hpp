#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "podq/partition.hpp"

namespace podq {

/// Refusal to enumerate past the configured bound.
class EnumerationBoundError : public std::out_of_range {
public:
    EnumerationBoundError(long long n, long long bound);
    long long n() const noexcept { return n_; }
    long long bound() const noexcept { return bound_; }

private:
    long long n_;
    long long bound_;
};

struct EnumerationLimits {
    static constexpr long long kDefaultMaxN = 60;
    long long max_n = kDefaultMaxN;
};

/// Throws EnumerationBoundError if n > limits.max_n, DomainError if n < 0.
void check_enumeration_bound(long long n, const EnumerationLimits& limits);

using PartitionVisitor = std::function<void(const Partition&)>;

/// Visits every partition of n once, in lexicographically decreasing order
/// of the part sequence: (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
void for_each_partition(long long n, const PartitionVisitor& visit, const EnumerationLimits& limits = {});

/// Visits the members of one family, in the same order as for_each_partition.
/// Generates members directly under the family's constraints rather than
/// filtering the full enumeration.
void for_each_in_family(long long n, Family family, const PartitionVisitor& visit,
                        const EnumerationLimits& limits = {});

std::vector<Partition> enumerate_partitions(long long n, const EnumerationLimits& limits = {});
std::vector<Partition> enumerate_family(long long n, Family family, const EnumerationLimits& limits = {});

/// Cardinality of the family at n by exhaustive generation; 0 for n < 0.
mpz_class count_family(long long n, Family family, const EnumerationLimits& limits = {});

}  // namespace podq
