#include "podq/pochhammer.hpp"

#include <stdexcept>

#include "podq/partition.hpp"

namespace podq {

PochhammerLength PochhammerLength::finite(long long k) {
    if (k < 0) throw DomainError("Pochhammer length must be nonnegative, got " + std::to_string(k));
    return PochhammerLength(Kind::Finite, 0, k);
}

std::optional<long long> PochhammerLength::evaluate(std::optional<long long> index) const {
    switch (kind_) {
        case Kind::Infinite:
            return std::nullopt;
        case Kind::Finite:
            return intercept_;
        case Kind::Affine: {
            if (!index) throw DomainError("affine Pochhammer length requires a summation index");
            const long long len = slope_ * *index + intercept_;
            if (len < 0) {
                throw DomainError("Pochhammer length " + std::to_string(slope_) + "*" + std::to_string(*index) +
                                  "+" + std::to_string(intercept_) + " is negative");
            }
            return len;
        }
    }
    return std::nullopt;
}

void PochhammerSpec::validate() const {
    if (sign != 1 && sign != -1) throw std::invalid_argument("Pochhammer sign must be +1 or -1");
    if (step == 0) throw std::invalid_argument("Pochhammer base exponent must be >= 1");
}

std::string PochhammerSpec::to_string() const {
    std::string out = "(";
    if (sign < 0) out += "-";
    out += a_exp == 0 ? "1" : (a_exp == 1 ? "q" : "q^" + std::to_string(a_exp));
    out += step == 1 ? ";q)_" : ";q^" + std::to_string(step) + ")_";
    switch (length.kind()) {
        case PochhammerLength::Kind::Infinite: out += "inf"; break;
        case PochhammerLength::Kind::Finite: out += std::to_string(*length.evaluate(std::nullopt)); break;
        case PochhammerLength::Kind::Affine: out += "i"; break;
    }
    return out;
}

PochhammerSpec poch_inf(int sign, std::size_t a_exp, std::size_t step) {
    return {sign, a_exp, step, PochhammerLength::infinite()};
}

PochhammerSpec poch_finite(int sign, std::size_t a_exp, std::size_t step, long long k) {
    return {sign, a_exp, step, PochhammerLength::finite(k)};
}

PochhammerSpec poch_affine(int sign, std::size_t a_exp, std::size_t step, long long slope, long long intercept) {
    return {sign, a_exp, step, PochhammerLength::affine(slope, intercept)};
}

namespace {

// Applies factors j in [from, to) of the spec, multiplying or dividing.
// Factors of degree beyond the order are 1 and skipped.
void apply_factors(Series& s, const PochhammerSpec& spec, long long from, long long to, bool divide) {
    const std::size_t order = s.order();
    for (long long j = from; j < to; ++j) {
        const std::size_t e = spec.a_exp + spec.step * static_cast<std::size_t>(j);
        if (e > order) break;
        if (divide) {
            s.divide_binomial(spec.sign, e);
        } else {
            s.multiply_binomial(spec.sign, e);
        }
    }
}

long long factor_count(const PochhammerSpec& spec, std::optional<long long> index, std::size_t order) {
    if (auto len = spec.length.evaluate(index)) return *len;
    // infinite: every factor whose exponent fits in the order
    if (spec.a_exp > order) return 0;
    return static_cast<long long>((order - spec.a_exp) / spec.step) + 1;
}

}  // namespace

Series& multiply_by_pochhammer(Series& s, const PochhammerSpec& spec, std::optional<long long> index) {
    spec.validate();
    apply_factors(s, spec, 0, factor_count(spec, index, s.order()), false);
    return s;
}

Series& divide_by_pochhammer(Series& s, const PochhammerSpec& spec, std::optional<long long> index) {
    spec.validate();
    apply_factors(s, spec, 0, factor_count(spec, index, s.order()), true);
    return s;
}

Series pochhammer(const PochhammerSpec& spec, std::optional<long long> index, std::size_t order) {
    Series s = Series::one(order);
    return multiply_by_pochhammer(s, spec, index);
}

void TermSpec::validate() const {
    for (const auto& p : numerator) p.validate();
    for (const auto& p : denominator) p.validate();
    if (monomial_step == 0) throw std::invalid_argument("term monomial step must be >= 1 for the sum to converge");
    if (first_index < 0) throw std::invalid_argument("summation must start at a nonnegative index");
}

Series sum_ratio_terms(const TermSpec& t, std::size_t order) {
    t.validate();

    struct Tracked {
        const PochhammerSpec* spec;
        bool divide;
        long long applied = 0;
    };

    Series ratio = Series::one(order);
    std::vector<Tracked> tracked;
    long long i = t.first_index;
    auto setup = [&](const std::vector<PochhammerSpec>& specs, bool divide) {
        for (const auto& spec : specs) {
            if (spec.length.kind() == PochhammerLength::Kind::Affine) {
                tracked.push_back({&spec, divide, 0});
            } else {
                apply_factors(ratio, spec, 0, factor_count(spec, std::nullopt, order), divide);
            }
        }
    };
    setup(t.numerator, false);
    setup(t.denominator, true);

    Series sum(order);
    for (;; ++i) {
        const std::size_t degree = t.monomial_step * static_cast<std::size_t>(i) + t.monomial_offset;
        if (degree > order) break;
        for (auto& tr : tracked) {
            const long long want = *tr.spec->length.evaluate(i);
            if (want > tr.applied) {
                apply_factors(ratio, *tr.spec, tr.applied, want, tr.divide);
            } else if (want < tr.applied) {
                // shrinking length: undo the surplus factors
                apply_factors(ratio, *tr.spec, want, tr.applied, !tr.divide);
            }
            tr.applied = want;
        }
        sum += ratio.shifted(degree);
    }
    if (t.constant_shift != 0) sum += Series::monomial(Integer(static_cast<long>(t.constant_shift)), 0, order);
    return sum;
}

}  // namespace podq
