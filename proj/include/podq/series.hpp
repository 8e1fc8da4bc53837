#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace podq {

using Integer = mpz_class;

/// Division by a series whose constant term is not a unit.
class NotInvertibleError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Formal power series in q with exact integer coefficients, truncated at
 * degree `order()` (inclusive). Holds exactly order()+1 coefficients.
 *
 * Binary operations on series of different orders produce a result at the
 * smaller order. No operation ever rounds: the only division is by series
 * whose constant term is +1 or -1.
 */
class Series {
public:
    /// The zero series at the given order.
    explicit Series(std::size_t order);
    /// Throws std::invalid_argument unless coeffs.size() == order + 1.
    Series(std::size_t order, std::vector<Integer> coeffs);

    static Series one(std::size_t order);
    /// c·q^exponent, or zero when exponent > order.
    static Series monomial(const Integer& c, std::size_t exponent, std::size_t order);
    /// 1 - sign·q^exponent.
    static Series binomial(int sign, std::size_t exponent, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Integer> coeffs() const noexcept { return coeffs_; }

    /// Coefficient of q^n. Throws std::out_of_range past the truncation
    /// order, never returns a silent zero.
    const Integer& coefficient(std::size_t n) const;

    Series truncated(std::size_t order) const;
    /// q^k · s at the same order.
    Series shifted(std::size_t k) const;

    /// In place s ← s·(1 - sign·q^exponent). O(order).
    Series& multiply_binomial(int sign, std::size_t exponent);
    /// In place s ← s / (1 - sign·q^exponent). O(order).
    /// exponent must be >= 1 (otherwise the divisor is 0 or 2).
    Series& divide_binomial(int sign, std::size_t exponent);

    Series& operator+=(const Series& rhs);
    Series& operator-=(const Series& rhs);
    Series& operator*=(const Series& rhs);
    Series& operator*=(const Integer& c);

    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(Series a, const Integer& c) { return a *= c; }
    Series operator-() const;

    /// Equal orders and equal coefficients.
    friend bool operator==(const Series& a, const Series& b) = default;

private:
    std::vector<Integer> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);

/// Multiplicative inverse up to the truncation order. Requires a constant
/// term of +1 or -1, throws NotInvertibleError otherwise.
Series series_invert(const Series& s);

/// Same as s.coefficient(n).
const Integer& coefficient(const Series& s, std::size_t n);

/// First degree at which the two series differ, comparing up to the smaller
/// order. nullopt when they agree there.
std::optional<std::size_t> first_difference(const Series& a, const Series& b);

}  // namespace podq
