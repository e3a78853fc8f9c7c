#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace trapezoid {

// Arbitrary-precision integers and rationals. Rational values are always
// kept in lowest terms with a positive denominator.
//
// gmpxx uses expression templates: spell out the type instead of `auto`
// when storing the result of an arithmetic expression.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

inline Integer to_integer(std::int64_t v) { return Integer(static_cast<long>(v)); }

// "p/q", or "p" when the value is integral.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

// Accepts ["-"] digits ["/" digits] in decimal; throws SyntaxError on
// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

// floor and sign helpers that stay exact.
Integer floor_of(const Rational& x);
inline int sign_of(const Rational& x) { return sgn(x); }

}  // namespace trapezoid
