#ifndef PPT_POLYNOMIAL_HPP
#define PPT_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace ppt {

/// Univariate polynomial in y with arbitrary-precision integer coefficients.
/// coefficients()[i] multiplies y^i; trailing zeros are trimmed, so the zero
/// polynomial has no coefficients.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Integer> coefficients) : c_(std::move(coefficients)) { trim(); }
    IntPolynomial(std::initializer_list<long long> coefficients) {
        for (auto v : coefficients) c_.emplace_back(v);
        trim();
    }

    static IntPolynomial monomial(std::size_t degree, Integer coefficient = 1) {
        std::vector<Integer> c(degree + 1, Integer(0));
        c[degree] = std::move(coefficient);
        return IntPolynomial(std::move(c));
    }

    const std::vector<Integer>& coefficients() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree, with -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Integer coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }

    Integer evaluate(const Integer& y) const {
        Integer acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * y + *it;
        return acc;
    }

    IntPolynomial& operator+=(const IntPolynomial& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Integer(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return IntPolynomial(std::move(c));
    }

    /// p(y + shift), expanded by the binomial theorem.
    IntPolynomial shifted(long shift) const {
        std::vector<Integer> out(c_.size(), Integer(0));
        const Integer s = shift;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            // c_k (y + s)^k = c_k * sum_j C(k, j) s^(k-j) y^j
            Integer binom = 1;
            for (std::size_t j = 0; j <= k; ++j) {
                if (j > 0) binom = binom * (k - j + 1) / j;
                Integer power = 1;
                for (std::size_t e = 0; e < k - j; ++e) power *= s;
                out[j] += c_[k] * binom * power;
            }
        }
        return IntPolynomial(std::move(out));
    }

    friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

    /// Space-separated coefficients, constant term first; "0" for the zero polynomial.
    std::string coefficient_list() const {
        if (c_.empty()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i > 0) out += ' ';
            out += c_[i].str();
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Integer> c_;
};

} // namespace ppt

#endif // PPT_POLYNOMIAL_HPP
