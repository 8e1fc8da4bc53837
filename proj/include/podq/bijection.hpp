#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "podq/partition.hpp"

namespace podq {

/// Which of the two constructive identities a map belongs to:
/// T31 maps C(n) onto O1(n) ⊔ O1(n-1), T32 maps C(n) onto O3(n+2) ⊔ O3(n-1).
enum class Theorem { T31, T32 };

std::string_view theorem_name(Theorem t) noexcept;  // "3.1" / "3.2"
Theorem parse_theorem(std::string_view text);        // accepts "3.1", "T31", "31"

/// Range of n on which the theorem's map is defined: n > 1 for T31, n > 2 for T32.
long long theorem_min_n(Theorem t) noexcept;

/// Forward cases are numbered 1..7 (T31) or 1..11 (T32); the two converse
/// maps are numbered 1..2 with `converse` set.
struct CaseLabel {
    Theorem theorem = Theorem::T31;
    int number = 0;
    bool converse = false;

    /// "CASE 7" or "CONVERSE 2".
    std::string to_string() const;
    friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

int case_count(Theorem t) noexcept;

/// A target (or source) family at an offset from n, e.g. O1(n-1).
struct Target {
    Family family = Family::O1;
    int offset = 0;

    std::string to_string(long long n) const;  // "O1(40)"
    std::string symbolic() const;              // "O1(n-1)"
    friend bool operator==(const Target&, const Target&) = default;
};

inline constexpr Target kO1n{Family::O1, 0};
inline constexpr Target kO1nMinus1{Family::O1, -1};
inline constexpr Target kO3nPlus2{Family::O3, 2};
inline constexpr Target kO3nMinus1{Family::O3, -1};

/// The two families a theorem's forward map lands in.
std::pair<Target, Target> theorem_targets(Theorem t) noexcept;

/// Parses "n", "n-1", "n+2" (or "O1(n-1)" style) for the given theorem.
Target parse_source(Theorem t, std::string_view text);

/**
 * Audit trail of one application of a map.
 *
 * Forward: `mu` is the intermediate partition when the case builds one
 * (λ' or μ); alpha is the distinct-odd-parts component, beta the component
 * whose odd parts have even multiplicity, and output = alpha ∪ Φ(beta).
 *
 * Converse: `mu` is the adjusted partition before splitting, phi_beta
 * holds its parts ≡ 2 (mod 4), beta their halves, alpha the untouched
 * parts, and output = alpha ∪ beta ∈ C(n).
 */
struct MappingRecord {
    Partition input;
    CaseLabel case_label;
    std::optional<Partition> mu;
    Partition alpha;
    Partition beta;
    Partition phi_beta;
    Partition output;
    Family target_family = Family::O1;
    long long target_n = 0;

    std::string target_string() const;
    friend bool operator==(const MappingRecord&, const MappingRecord&) = default;
};

/// A map produced an output outside its declared target. Carries the record.
class ContractViolation : public std::logic_error {
public:
    ContractViolation(const std::string& what, MappingRecord record);
    const MappingRecord& record() const noexcept { return record_; }

private:
    MappingRecord record_;
};

/// Merges equal odd parts two by two (a, a → 2a); even parts pass through.
/// Throws DomainError naming the first odd part of odd multiplicity.
Partition phi(const Partition& p);

/// Splits each part w ≡ 2 (mod 4) into two parts w/2; other parts unchanged.
Partition phi_inverse(const Partition& p);

/// For each odd part of multiplicity m, (m mod 2) copies go to alpha and the
/// rest to beta; even parts go to alpha. alpha ∪ beta = p.
std::pair<Partition, Partition> split_alpha_beta(const Partition& p);

/// Largest odd part occurring at least twice.
std::optional<int> largest_repeated_odd(const Partition& p);

/// Independent evaluation of one forward case's predicate on p ∈ C.
bool case_applies(Theorem t, int case_number, const Partition& p);

/// The unique forward case for p ∈ C(n). Throws DomainError if p ∉ C or p is
/// empty, std::logic_error if zero or several case predicates hold.
CaseLabel classify_case(const Partition& p, Theorem t);

/// Forward maps. The output is checked against the case's target family
/// before returning; a failed check throws ContractViolation.
MappingRecord thm31_forward(const Partition& p);
MappingRecord thm32_forward(const Partition& p);
MappingRecord forward_map(Theorem t, const Partition& p);

/// Converse maps; `source` names the family p is taken from. Throws
/// DomainError when p is not in that family, ContractViolation when the
/// result is not in C.
MappingRecord converse_map(Theorem t, const Partition& p, Target source);
Partition thm31_backward(const Partition& p, Target source);
Partition thm32_backward(const Partition& p, Target source);

}  // namespace podq
