#include "podq/named_series.hpp"

#include <string>

namespace podq {

std::string_view series_name(NamedSeries s) noexcept {
    switch (s) {
        case NamedSeries::Pod: return "pod";
        case NamedSeries::C: return "c";
        case NamedSeries::PodGt2: return "podgt2";
        case NamedSeries::O1: return "o1";
        case NamedSeries::O2: return "o2";
        case NamedSeries::O3Sum: return "o3_sum";
        case NamedSeries::O3Closed: return "o3_closed";
        case NamedSeries::LambdaSum: return "lambda_sum";
        case NamedSeries::LambdaClosed: return "lambda_closed";
        case NamedSeries::Ab1Lhs: return "ab1_lhs";
        case NamedSeries::Ab1Rhs: return "ab1_rhs";
        case NamedSeries::Ab2Lhs: return "ab2_lhs";
        case NamedSeries::Ab2Rhs: return "ab2_rhs";
    }
    return "?";
}

NamedSeries parse_series_name(std::string_view name) {
    for (NamedSeries s : kAllNamedSeries) {
        if (series_name(s) == name) return s;
    }
    std::string valid;
    for (NamedSeries s : kAllNamedSeries) {
        if (!valid.empty()) valid += ", ";
        valid += series_name(s);
    }
    throw ParseError("unknown series '" + std::string(name) + "'; valid names: " + valid);
}

NamedSeries series_for_family(Family f) noexcept {
    switch (f) {
        case Family::Pod: return NamedSeries::Pod;
        case Family::PodGt2: return NamedSeries::PodGt2;
        case Family::O1: return NamedSeries::O1;
        case Family::O2: return NamedSeries::O2;
        case Family::O3: return NamedSeries::O3Closed;
        case Family::C: return NamedSeries::C;
    }
    return NamedSeries::Pod;
}

namespace {

Series quotient(std::initializer_list<PochhammerSpec> num, std::initializer_list<PochhammerSpec> den,
                std::size_t order) {
    Series s = Series::one(order);
    for (const auto& p : num) multiply_by_pochhammer(s, p);
    for (const auto& p : den) divide_by_pochhammer(s, p);
    return s;
}

// (q^2;q^4)_inf / ((1+q^3)(q;q)_inf)
Series lambda_closed(std::size_t order) {
    Series s = quotient({poch_inf(1, 2, 4)}, {poch_inf(1, 1, 1)}, order);
    return s.divide_binomial(-1, 3);
}

// (1-q)/(1+q^3)
Series one_minus_q_over_one_plus_q3(std::size_t order) {
    return Series::binomial(1, 1, order).divide_binomial(-1, 3);
}

// k·q·(q^4;q^4)_inf / ((1+q^3)(q;q)_inf) + (1-q)/(1+q^3)
Series ab_rhs(long k, std::size_t order) {
    Series s = quotient({poch_inf(1, 4, 4)}, {poch_inf(1, 1, 1)}, order);
    s.divide_binomial(-1, 3);
    s = s.shifted(1) * Integer(k);
    return s + one_minus_q_over_one_plus_q3(order);
}

}  // namespace

TermSpec o1_term_spec() {
    TermSpec t;
    t.numerator = {poch_affine(-1, 1, 2, 1, 0)};
    t.denominator = {poch_affine(1, 2, 2, 1, 0)};
    t.monomial_step = 2;
    return t;
}

TermSpec o2_term_spec() {
    TermSpec t = o1_term_spec();
    t.monomial_step = 4;
    t.constant_shift = -1;
    return t;
}

TermSpec o3_term_spec() {
    // n = i + 1 >= 1
    TermSpec t;
    t.numerator = {poch_affine(-1, 1, 2, 1, 1)};
    t.denominator = {poch_affine(1, 2, 2, 1, 0)};
    t.monomial_step = 2;
    t.monomial_offset = 2;
    t.constant_shift = 1;
    return t;
}

TermSpec lambda_term_spec() {
    TermSpec t;
    t.numerator = {poch_affine(-1, 1, 2, 1, 1)};
    t.denominator = {poch_affine(1, 2, 2, 1, 0)};
    t.monomial_step = 2;
    return t;
}

TermSpec ab1_term_spec() {
    TermSpec t;
    t.numerator = {poch_affine(-1, 2, 2, 1, 0)};
    t.denominator = {poch_affine(1, 1, 2, 1, 0)};
    t.monomial_step = 2;
    return t;
}

TermSpec ab2_inner_term_spec() {
    TermSpec t;
    t.numerator = {poch_affine(1, 1, 1, 2, 0)};
    t.denominator = {poch_affine(1, 4, 4, 1, 0)};
    t.monomial_step = 4;
    return t;
}

Series o1_sum(std::size_t order) { return sum_ratio_terms(o1_term_spec(), order); }

Series o2_sum(std::size_t order) { return sum_ratio_terms(o2_term_spec(), order); }

Series ab2_inner_sum(std::size_t order) { return sum_ratio_terms(ab2_inner_term_spec(), order); }

Series ab2_inner_closed(std::size_t order) {
    Series tail = quotient({poch_inf(1, 1, 1)}, {poch_inf(1, 4, 4)}, order);
    tail.multiply_binomial(1, 1);
    tail.divide_binomial(-1, 3);
    Series head = Series::monomial(2, 1, order).divide_binomial(-1, 3);
    return head + tail;
}

Series named_gf(NamedSeries which, std::size_t order) {
    switch (which) {
        case NamedSeries::Pod:
            return quotient({poch_inf(-1, 1, 2)}, {poch_inf(1, 2, 2)}, order);
        case NamedSeries::C:
            return quotient({poch_inf(1, 2, 4)}, {poch_inf(1, 1, 1)}, order);
        case NamedSeries::PodGt2:
            return quotient({poch_inf(-1, 3, 2)}, {poch_inf(1, 4, 2)}, order);
        case NamedSeries::O1:
            return quotient({poch_inf(-1, 3, 2)}, {poch_inf(1, 2, 2)}, order);
        case NamedSeries::O2:
            return quotient({poch_inf(-1, 5, 2)}, {poch_inf(1, 4, 2)}, order) - Series::one(order);
        case NamedSeries::O3Sum:
            return sum_ratio_terms(o3_term_spec(), order);
        case NamedSeries::O3Closed:
            return lambda_closed(order).shifted(2) + Series::one(order);
        case NamedSeries::LambdaSum:
            return sum_ratio_terms(lambda_term_spec(), order);
        case NamedSeries::LambdaClosed:
            return lambda_closed(order);
        case NamedSeries::Ab1Lhs:
            return sum_ratio_terms(ab1_term_spec(), order);
        case NamedSeries::Ab1Rhs:
            return ab_rhs(1, order);
        case NamedSeries::Ab2Lhs: {
            Series s = ab2_inner_sum(order);
            multiply_by_pochhammer(s, poch_inf(1, 4, 4));
            return divide_by_pochhammer(s, poch_inf(1, 1, 1));
        }
        case NamedSeries::Ab2Rhs:
            return ab_rhs(2, order);
    }
    throw ParseError("unknown named series");
}

QBinomialReport qbinomial_check(Monomial a, Monomial z, std::size_t order, std::size_t base_step) {
    if (z.sign == 0 || z.exponent == 0) {
        throw std::invalid_argument("q-binomial check needs a nonzero z of positive q-degree");
    }
    if (a.sign < -1 || a.sign > 1 || z.sign < -1 || z.sign > 1) {
        throw std::invalid_argument("monomial signs must be -1, 0 or +1");
    }
    if (base_step == 0) throw std::invalid_argument("base step must be >= 1");

    // running term (a;p)_n / (p;p)_n · z^n
    Series lhs = Series::one(order);
    Series ratio = Series::one(order);
    for (std::size_t n = 1; n * z.exponent <= order; ++n) {
        ratio.multiply_binomial(a.sign, a.exponent + base_step * (n - 1));
        ratio.divide_binomial(1, base_step * n);
        Series term = ratio.shifted(n * z.exponent);
        if (z.sign < 0 && n % 2 == 1) term = -term;
        lhs += term;
    }

    Series rhs = Series::one(order);
    if (a.sign != 0) {
        multiply_by_pochhammer(rhs, poch_inf(a.sign * z.sign, a.exponent + z.exponent, base_step));
    }
    divide_by_pochhammer(rhs, poch_inf(z.sign, z.exponent, base_step));

    QBinomialReport report;
    report.first_mismatch = first_difference(lhs, rhs);
    report.equal = !report.first_mismatch.has_value();
    report.lhs = std::move(lhs);
    report.rhs = std::move(rhs);
    return report;
}

}  // namespace podq
