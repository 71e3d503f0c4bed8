#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "latticetri/errors.hpp"

namespace latticetri {

// Exact scalar arithmetic. cpp_rational keeps every value canonical:
// lowest terms, denominator > 0, so equality is plain value equality.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "+p", "-p" or "p/q" with q a positive integer literal.
/// Anything else (floats, whitespace, "1/0", "1/-2", ...) is rejected.
inline Rational parse_rational(std::string_view text) {
    const auto fail = [&](const char* why) -> Rational {
        throw ParseError("invalid rational '" + std::string(text) + "': " + why);
    };

    std::size_t pos = 0;
    const std::size_t len = text.size();
    if (len == 0) return fail("empty");

    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::size_t digits_begin = pos;
    while (pos < len && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == digits_begin) return fail("expected digits");
    Int numerator(std::string(text.substr(digits_begin, pos - digits_begin)));
    if (negative) numerator = -numerator;

    if (pos == len) return Rational(numerator);

    if (text[pos] != '/') return fail("unexpected character");
    ++pos;
    std::size_t den_begin = pos;
    while (pos < len && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == den_begin || pos != len) return fail("denominator must be an unsigned integer");
    const Int denominator(std::string(text.substr(den_begin, pos - den_begin)));
    if (denominator == 0) return fail("denominator must be positive");

    return Rational(numerator, denominator);
}

/// Canonical text form: "p" when the denominator is 1, else "p/q".
inline std::string format_rational(const Rational& value) {
    const Int num = numerator(value);
    const Int den = denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline double to_double(const Rational& value) { return value.convert_to<double>(); }

inline Rational rational_abs(const Rational& value) { return value < 0 ? Rational(-value) : value; }

}  // namespace latticetri
