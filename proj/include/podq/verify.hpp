#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "podq/bfile.hpp"
#include "podq/bijection.hpp"
#include "podq/enumerate.hpp"
#include "podq/report.hpp"

namespace podq {

/// The identity catalog. I14 is pod(n) = c(n).
enum class IdentityTag { I11, I12, I13, I14, I16, I17 };

inline constexpr IdentityTag kAllIdentities[] = {IdentityTag::I11, IdentityTag::I12, IdentityTag::I13,
                                                 IdentityTag::I14, IdentityTag::I16, IdentityTag::I17};

/// A family count evaluated at n + offset.
struct CountTerm {
    Family family;
    int offset;
};

struct IdentityInfo {
    IdentityTag tag;
    std::string_view name;     ///< "1.1"
    std::string_view formula;  ///< "o1(n) + o1(n-1) = pod(n)"
    std::vector<CountTerm> lhs;
    CountTerm rhs;
    long long min_n;  ///< identity claimed for n >= min_n

    /// Largest positive offset among the terms.
    int max_offset() const noexcept;
};

const IdentityInfo& identity_info(IdentityTag tag);
/// Accepts "1.1", "I11", "11".
IdentityTag parse_identity(std::string_view text);

enum class Method { Enumeration, Series, Both };
std::string_view method_name(Method m) noexcept;
Method parse_method(std::string_view text);  // enum|enumeration, series, both

struct VerifyOptions {
    EnumerationLimits limits;
    std::size_t witness_cap = 10;
};

/// Checks the identity for every n in [min_n, n_max] with exact integer
/// comparison. Values of n below the validity range are evaluated as well
/// and recorded as informational rows.
VerificationReport verify_identity(IdentityTag tag, long long n_max, Method method, const VerifyOptions& opts = {});

/**
 * Exhaustive audit of a theorem's forward map on C(n): totality, target
 * membership, injectivity, cardinality, and round-trips in both directions.
 * Throws DomainError for n below the theorem's range and
 * EnumerationBoundError when a target level is past the bound.
 */
VerificationReport verify_bijection(Theorem t, long long n, const VerifyOptions& opts = {});

/// verify_bijection for every n in [n_lo, n_hi], one summary row per n.
VerificationReport verify_bijection_range(Theorem t, long long n_lo, long long n_hi, const VerifyOptions& opts = {});

/// Forward map plus round-trip for a single input p ∈ C(n).
VerificationReport verify_mapping(Theorem t, const Partition& p, const VerifyOptions& opts = {});

/**
 * Coefficientwise checks of the series identities behind the q-series
 * proofs, eight sub-checks:
 *   (a) ab1_lhs = ab1_rhs, (b) ab2_lhs = ab2_rhs,
 *   (c) Λ sum = closed form, (d) o3 sum = o3 closed form,
 *   (e) o1 sum = product, (f) o2 sum = product, (g) pod = c,
 *   (h) the o1, o2 and o3 generating-function identities multiplied
 *       through by (1+q) or (1+q^3).
 * Also records, informationally, the smallest n from which
 * o3(n+2) + o3(n-1) = c(n) holds up to the order.
 */
VerificationReport verify_proof_chain(std::size_t order, const VerifyOptions& opts = {});

/// Enumeration counts against generating-function coefficients, n = 0..n_max.
VerificationReport cross_check_counts(Family f, long long n_max, const VerifyOptions& opts = {});

/// Compares the family's generating function against a b-file. Entry with
/// file index i is compared with the coefficient of q^(i + index_shift);
/// entries landing at negative degree are ignored. Throws DomainError when
/// nothing overlaps.
VerificationReport oeis_cross_check(Family f, const BFile& bfile, long long index_shift = 0,
                                    const VerifyOptions& opts = {});

}  // namespace podq
