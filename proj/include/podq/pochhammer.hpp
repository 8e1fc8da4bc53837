#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "podq/series.hpp"

namespace podq {

/// Length of a q-shifted factorial: a fixed k, infinity, or slope·i + intercept
/// in a summation index i.
class PochhammerLength {
public:
    enum class Kind { Finite, Infinite, Affine };

    static PochhammerLength finite(long long k);
    static PochhammerLength infinite() { return PochhammerLength(Kind::Infinite, 0, 0); }
    static PochhammerLength affine(long long slope, long long intercept) {
        return PochhammerLength(Kind::Affine, slope, intercept);
    }

    Kind kind() const noexcept { return kind_; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }

    /// Number of factors, nullopt for infinite. Affine lengths need `index`;
    /// throws DomainError when missing or when the value is negative.
    std::optional<long long> evaluate(std::optional<long long> index) const;

private:
    PochhammerLength(Kind kind, long long a, long long b) : kind_(kind), slope_(a), intercept_(b) {}

    Kind kind_;
    long long slope_;
    long long intercept_;
};

/**
 * (sign·q^a_exp ; q^step)_length, that is the product over j of
 * (1 - sign·q^(a_exp + step·j)).
 *
 * For infinite length the factor j is kept iff a_exp + step·j <= order;
 * the remaining factors are 1 modulo q^(order+1).
 */
struct PochhammerSpec {
    int sign = 1;
    std::size_t a_exp = 1;
    std::size_t step = 1;
    PochhammerLength length = PochhammerLength::infinite();

    /// Throws std::invalid_argument on sign not in {-1, +1} or step == 0.
    void validate() const;
    /// e.g. "(-q^3;q^2)_inf".
    std::string to_string() const;
};

/// Shorthands: poch_inf(-1, 1, 2) is (-q;q^2)_∞.
PochhammerSpec poch_inf(int sign, std::size_t a_exp, std::size_t step);
PochhammerSpec poch_finite(int sign, std::size_t a_exp, std::size_t step, long long k);
PochhammerSpec poch_affine(int sign, std::size_t a_exp, std::size_t step, long long slope, long long intercept);

Series pochhammer(const PochhammerSpec& spec, std::optional<long long> index, std::size_t order);

/// s ← s · (spec), factor by factor in O(order) each.
Series& multiply_by_pochhammer(Series& s, const PochhammerSpec& spec, std::optional<long long> index = std::nullopt);
/// s ← s / (spec). Throws NotInvertibleError if a factor has exponent 0.
Series& divide_by_pochhammer(Series& s, const PochhammerSpec& spec, std::optional<long long> index = std::nullopt);

/**
 * Summand of a q-hypergeometric sum:
 *
 *   term(i) = prod numerator(i) / prod denominator(i) · q^(monomial_step·i + monomial_offset)
 *
 * summed over i >= first_index, plus constant_shift.
 */
struct TermSpec {
    std::vector<PochhammerSpec> numerator;
    std::vector<PochhammerSpec> denominator;
    std::size_t monomial_step = 1;
    std::size_t monomial_offset = 0;
    long long constant_shift = 0;
    long long first_index = 0;

    void validate() const;
};

/**
 * Partial sum of a TermSpec over every index whose monomial degree is within
 * `order`; terms past that point vanish modulo q^(order+1).
 *
 * Consecutive summands differ by a handful of binomial factors, so the
 * running ratio is updated incrementally rather than rebuilt per term.
 */
Series sum_ratio_terms(const TermSpec& t, std::size_t order);

}  // namespace podq
