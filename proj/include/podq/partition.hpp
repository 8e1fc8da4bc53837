#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace podq {

/// Raised when an operation is applied outside its mathematical domain
/// (a non-positive part, a partition outside the required family, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Raised on malformed textual input. `line()` is 0 when not line-oriented.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0);
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/**
 * An integer partition stored as a non-increasing sequence of positive parts.
 *
 * Every constructor canonicalizes, so two partitions compare equal exactly
 * when they have the same multiset of parts. The empty partition is the
 * unique partition of 0.
 */
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> values);
    explicit Partition(std::vector<int> values);

    /// Builds from a sequence that is already non-increasing and positive.
    /// Only checked in debug builds; used by the enumerators.
    static Partition from_sorted(std::vector<int> parts);

    std::span<const int> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }

    /// Sum of the parts.
    long long size() const noexcept;

    /// Largest part, or 0 for the empty partition.
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Part at 0-based position `i`, or 0 past the end (so λ₂ of a
    /// single-part partition reads as 0).
    int part_or_zero(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

    /// Number of occurrences of `part`. Throws DomainError when part < 1.
    int multiplicity(int part) const;

    /// part -> count, for parts present.
    std::map<int, int, std::greater<>> multiplicities() const;

    /// "11,8,5,5,5,4,3"; the empty partition prints as "".
    std::string to_string() const;

    /// Parses comma separated parts, accepting exponent notation ("12^2,11^3,8").
    /// Whitespace and surrounding parentheses are ignored.
    static Partition parse(std::string_view text);

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

/// Sorts into a canonical partition. Rejects any value <= 0.
Partition canonicalize(std::span<const int> values);

/// Partition whose multiplicities are the sums of both operands'.
Partition multiset_union(const Partition& a, const Partition& b);

/// The six restricted families.
enum class Family { Pod, PodGt2, O1, O2, O3, C };

inline constexpr Family kAllFamilies[] = {Family::Pod, Family::PodGt2, Family::O1,
                                          Family::O2,  Family::O3,     Family::C};

/// Lower-case short name: pod, podgt2, o1, o2, o3, c.
std::string_view family_name(Family f) noexcept;

/// Display name matching the usual notation: Pod, Pod>2, O1, O2, O3, C.
std::string_view family_label(Family f) noexcept;

/// Case-insensitive; also accepts "pod>2" and "pod_gt2".
Family parse_family(std::string_view name);

bool has_distinct_odd_parts(const Partition& p) noexcept;

/// Exact membership test.
///
/// Empty partition: member of Pod, Pod>2, C, O1 and O3, not of O2. These
/// conventions make enumeration counts at n = 0 agree with the constant
/// terms of the generating functions; "largest part is even" is treated as
/// vacuously true for the empty partition.
bool is_in_family(const Partition& p, Family f) noexcept;

}  // namespace podq
