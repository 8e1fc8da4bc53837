#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "podq/partition.hpp"
#include "podq/pochhammer.hpp"
#include "podq/series.hpp"

namespace podq {

/// Generating functions and companion series, built from products, quotients
/// and q-hypergeometric sums.
enum class NamedSeries {
    Pod,           ///< (-q;q^2)_inf / (q^2;q^2)_inf
    C,             ///< (q^2;q^4)_inf / (q;q)_inf
    PodGt2,        ///< (-q^3;q^2)_inf / (q^4;q^2)_inf
    O1,            ///< (-q^3;q^2)_inf / (q^2;q^2)_inf
    O2,            ///< (-q^5;q^2)_inf / (q^4;q^2)_inf - 1
    O3Sum,         ///< 1 + sum_{n>=1} (-q;q^2)_n q^{2n} / (q^2;q^2)_{n-1}
    O3Closed,      ///< 1 + q^2 * LambdaClosed
    LambdaSum,     ///< sum_{m>=0} (-q;q^2)_{m+1} q^{2m} / (q^2;q^2)_m
    LambdaClosed,  ///< (q^2;q^4)_inf / ((1+q^3)(q;q)_inf)
    Ab1Lhs,        ///< sum_{m>=0} (-q^2;q^2)_m q^{2m} / (q;q^2)_m
    Ab1Rhs,        ///< q(q^4;q^4)_inf / ((1+q^3)(q;q)_inf) + (1-q)/(1+q^3)
    Ab2Lhs,        ///< (q^4;q^4)_inf/(q;q)_inf * sum_{n>=0} (q;q)_{2n} q^{4n} / (q^4;q^4)_n
    Ab2Rhs,        ///< 2q(q^4;q^4)_inf / ((1+q^3)(q;q)_inf) + (1-q)/(1+q^3)
};

inline constexpr NamedSeries kAllNamedSeries[] = {
    NamedSeries::Pod,       NamedSeries::C,           NamedSeries::PodGt2,       NamedSeries::O1,
    NamedSeries::O2,        NamedSeries::O3Sum,       NamedSeries::O3Closed,     NamedSeries::LambdaSum,
    NamedSeries::LambdaClosed, NamedSeries::Ab1Lhs,   NamedSeries::Ab1Rhs,       NamedSeries::Ab2Lhs,
    NamedSeries::Ab2Rhs,
};

std::string_view series_name(NamedSeries s) noexcept;
/// Throws ParseError listing the valid names.
NamedSeries parse_series_name(std::string_view name);

Series named_gf(NamedSeries which, std::size_t order);

/// Generating function used for a family's counts (o3 uses the closed form).
NamedSeries series_for_family(Family f) noexcept;

/// The summation forms behind o1 and o2, with their term specs exposed.
TermSpec o1_term_spec();     ///< (-q;q^2)_n q^{2n} / (q^2;q^2)_n
TermSpec o2_term_spec();     ///< (-q;q^2)_n q^{4n} / (q^2;q^2)_n, shifted by -1
TermSpec o3_term_spec();     ///< (-q;q^2)_{i+1} q^{2i+2} / (q^2;q^2)_i, shifted by +1
TermSpec lambda_term_spec();
TermSpec ab1_term_spec();
TermSpec ab2_inner_term_spec();  ///< (q;q)_{2n} q^{4n} / (q^4;q^4)_n

Series o1_sum(std::size_t order);
Series o2_sum(std::size_t order);

/// sum_{n>=0} (q;q)_{2n} q^{4n} / (q^4;q^4)_n.
Series ab2_inner_sum(std::size_t order);
/// Closed form of the same sum, obtained by solving ab2_lhs = ab2_rhs for it:
/// 2q/(1+q^3) + (1-q)(q;q)_inf / ((1+q^3)(q^4;q^4)_inf).
Series ab2_inner_closed(std::size_t order);

/// sign·q^exponent; sign 0 denotes the zero monomial.
struct Monomial {
    int sign = 1;
    std::size_t exponent = 0;
};

struct QBinomialReport {
    bool equal = false;
    std::optional<std::size_t> first_mismatch;
    Series lhs{0};
    Series rhs{0};
};

/**
 * Checks sum_n (a;p)_n / (p;p)_n z^n == (az;p)_inf / (z;p)_inf to the given
 * order, where p = q^base_step. Requires z nonzero with exponent >= 1.
 */
QBinomialReport qbinomial_check(Monomial a, Monomial z, std::size_t order, std::size_t base_step = 1);

}  // namespace podq
