#include "podq/series.hpp"

#include <algorithm>
#include <string>

namespace podq {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::size_t order, std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != order + 1) {
        throw std::invalid_argument("series of order " + std::to_string(order) + " needs " +
                                    std::to_string(order + 1) + " coefficients, got " +
                                    std::to_string(coeffs_.size()));
    }
}

Series Series::one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::monomial(const Integer& c, std::size_t exponent, std::size_t order) {
    Series s(order);
    if (exponent <= order) s.coeffs_[exponent] = c;
    return s;
}

Series Series::binomial(int sign, std::size_t exponent, std::size_t order) {
    Series s = one(order);
    s.multiply_binomial(sign, exponent);
    return s;
}

const Integer& Series::coefficient(std::size_t n) const {
    if (n > order()) {
        throw std::out_of_range("coefficient of q^" + std::to_string(n) + " requested from a series truncated at order " +
                                std::to_string(order()));
    }
    return coeffs_[n];
}

Series Series::truncated(std::size_t new_order) const {
    if (new_order > order()) {
        throw std::out_of_range("cannot extend a series of order " + std::to_string(order()) + " to order " +
                                std::to_string(new_order));
    }
    return Series(new_order, std::vector<Integer>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
}

Series Series::shifted(std::size_t k) const {
    Series s(order());
    for (std::size_t i = k; i <= order(); ++i) s.coeffs_[i] = coeffs_[i - k];
    return s;
}

Series& Series::multiply_binomial(int sign, std::size_t exponent) {
    if (sign == 0) return *this;
    const std::size_t n = order();
    if (exponent == 0) {
        // (1 - sign) is 0 or 2
        *this *= Integer(1 - sign);
        return *this;
    }
    if (exponent > n) return *this;
    for (std::size_t k = n; k >= exponent; --k) {
        if (sign > 0) {
            coeffs_[k] -= coeffs_[k - exponent];
        } else {
            coeffs_[k] += coeffs_[k - exponent];
        }
    }
    return *this;
}

Series& Series::divide_binomial(int sign, std::size_t exponent) {
    if (sign == 0) return *this;
    if (exponent == 0) {
        throw NotInvertibleError("divisor 1 - (" + std::to_string(sign) + ") has a non-unit constant term");
    }
    const std::size_t n = order();
    for (std::size_t k = exponent; k <= n; ++k) {
        if (sign > 0) {
            coeffs_[k] += coeffs_[k - exponent];
        } else {
            coeffs_[k] -= coeffs_[k - exponent];
        }
    }
    return *this;
}

Series& Series::operator+=(const Series& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

Series& Series::operator-=(const Series& rhs) {
    if (rhs.order() < order()) coeffs_.resize(rhs.order() + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    Series out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (sgn(b.coeffs_[j]) == 0) continue;
            mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
        }
    }
    return out;
}

Series& Series::operator*=(const Series& rhs) {
    *this = *this * rhs;
    return *this;
}

Series& Series::operator*=(const Integer& c) {
    for (auto& x : coeffs_) x *= c;
    return *this;
}

Series Series::operator-() const {
    Series s(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) s.coeffs_[i] = -coeffs_[i];
    return s;
}

Series series_add(const Series& a, const Series& b) { return a + b; }

Series series_mul(const Series& a, const Series& b) { return a * b; }

Series series_invert(const Series& s) {
    const Integer& c0 = s.coefficient(0);
    if (c0 != 1 && c0 != -1) {
        throw NotInvertibleError("series with constant term " + c0.get_str() + " is not invertible over the integers");
    }
    // t_0 = 1/c0 = c0, t_k = -c0 · sum_{j=1..k} s_j t_{k-j}
    const std::size_t n = s.order();
    auto sc = s.coeffs();
    std::vector<Integer> t(n + 1);
    t[0] = c0;
    Integer acc;
    for (std::size_t k = 1; k <= n; ++k) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (sgn(sc[j]) == 0) continue;
            mpz_addmul(acc.get_mpz_t(), sc[j].get_mpz_t(), t[k - j].get_mpz_t());
        }
        t[k] = c0 > 0 ? Integer(-acc) : acc;
    }
    return Series(n, std::move(t));
}

const Integer& coefficient(const Series& s, std::size_t n) { return s.coefficient(n); }

std::optional<std::size_t> first_difference(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    for (std::size_t i = 0; i <= n; ++i) {
        if (a.coefficient(i) != b.coefficient(i)) return i;
    }
    return std::nullopt;
}

}  // namespace podq
