#ifndef PPT_SCALAR_HPP
#define PPT_SCALAR_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "errors.hpp"

namespace ppt {

using Integer = boost::multiprecision::cpp_int;
/// Exact fraction; always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Element of GF(2).
struct Bit {
    bool value = false;

    constexpr Bit() = default;
    constexpr Bit(bool v) : value(v) {}  // NOLINT(google-explicit-constructor)
    constexpr explicit Bit(int v) : value((v & 1) != 0) {}

    friend constexpr Bit operator+(Bit a, Bit b) { return Bit{a.value != b.value}; }
    friend constexpr Bit operator-(Bit a, Bit b) { return a + b; }
    friend constexpr Bit operator-(Bit a) { return a; }
    friend constexpr Bit operator*(Bit a, Bit b) { return Bit{a.value && b.value}; }
    friend constexpr Bit operator/(Bit a, Bit b) {
        if (!b.value) throw precondition_error("division by zero in GF(2)");
        return a;
    }
    Bit& operator+=(Bit b) { return *this = *this + b; }
    Bit& operator-=(Bit b) { return *this = *this - b; }
    Bit& operator*=(Bit b) { return *this = *this * b; }
    Bit& operator/=(Bit b) { return *this = *this / b; }

    friend constexpr bool operator==(Bit a, Bit b) = default;
};

/// Field tag and parsing/printing per scalar type.
template <class T>
struct field_traits;

template <>
struct field_traits<Bit> {
    static constexpr std::string_view tag = "f2";
    static Bit zero() { return Bit{false}; }
    static Bit one() { return Bit{true}; }
    static bool is_zero(Bit b) { return !b.value; }
    static std::string format(Bit b) { return b.value ? "1" : "0"; }
    static Bit parse(std::string_view tok) {
        if (tok == "0") return Bit{false};
        if (tok == "1") return Bit{true};
        throw parse_error("GF(2) entry must be 0 or 1, got '" + std::string(tok) + "'");
    }
};

namespace detail {

inline Integer parse_integer(std::string_view tok) {
    std::string_view digits = tok;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
        throw parse_error("malformed integer '" + std::string(tok) + "'");
    std::string s(tok.front() == '+' ? tok.substr(1) : tok);
    return Integer(s);
}

} // namespace detail

template <>
struct field_traits<Rational> {
    static constexpr std::string_view tag = "q";
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool is_zero(const Rational& r) { return r == 0; }
    static std::string format(const Rational& r) {
        if (boost::multiprecision::denominator(r) == 1)
            return boost::multiprecision::numerator(r).str();
        return boost::multiprecision::numerator(r).str() + "/" +
               boost::multiprecision::denominator(r).str();
    }
    static Rational parse(std::string_view tok) {
        auto slash = tok.find('/');
        if (slash == std::string_view::npos) return Rational(detail::parse_integer(tok));
        Integer num = detail::parse_integer(tok.substr(0, slash));
        std::string_view den_tok = tok.substr(slash + 1);
        if (!den_tok.empty() && (den_tok.front() == '-' || den_tok.front() == '+'))
            throw parse_error("denominator must be unsigned in '" + std::string(tok) + "'");
        Integer den = detail::parse_integer(den_tok);
        if (den == 0) throw parse_error("zero denominator in '" + std::string(tok) + "'");
        return Rational(num, den);
    }
};

} // namespace ppt

#endif // PPT_SCALAR_HPP
