#pragma once

// Base-60 numerals in absolute notation: ";" separates the integer part
// from the fraction, "," separates digits, e.g. "2,53,20" or "0;26,24".

#include "trapezoid/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trapezoid {

// A canonical sexagesimal numeral. Construction always canonicalizes:
// no leading zero integer digits (except the single digit 0), no trailing
// zero fraction digits, and zero is non-negative.
class SexValue {
public:
    SexValue();  // zero
    SexValue(int sign, std::vector<int> int_digits, std::vector<int> frac_digits);

    int sign() const { return sign_; }
    const std::vector<int>& int_digits() const { return int_digits_; }
    const std::vector<int>& frac_digits() const { return frac_digits_; }
    bool is_zero() const;

    bool operator==(const SexValue&) const = default;

private:
    int sign_ = 1;
    std::vector<int> int_digits_{0};
    std::vector<int> frac_digits_;
};

struct RegularFactorization {
    unsigned p = 0;  // exponent of 2
    unsigned q = 0;  // exponent of 3
    unsigned r = 0;  // exponent of 5

    bool operator==(const RegularFactorization&) const = default;
};

struct IntegerRoot {
    Integer floor_root;
    bool is_perfect = false;
};

SexValue parse_sex(std::string_view text);
std::string format_sex(const SexValue& v);

Rational sex_to_rational(const SexValue& v);

// Exact conversion. Throws NonTerminating when the reduced denominator is
// not regular, PlacesExceeded when more than max_frac_places digits are
// needed.
SexValue rational_to_sex(const Rational& x, std::size_t max_frac_places);

// Number of fractional base-60 digits needed to write x exactly, or
// nullopt when the expansion does not terminate.
std::optional<std::size_t> sex_places_needed(const Rational& x);

// x cut (toward zero) to frac_places base-60 digits. Never throws.
SexValue truncate_to_sex(const Rational& x, std::size_t frac_places);

std::optional<RegularFactorization> is_regular(const Integer& m);
Rational reciprocal_regular(const Integer& m);

IntegerRoot isqrt(const Integer& m);

// sqrt(x) truncated to frac_places base-60 fractional digits.
SexValue sqrt_sex(const Rational& x, std::size_t frac_places);

// floor(sqrt(x) * base^places) / base^places; shared by the sexagesimal
// and decimal renderers.
Rational truncated_sqrt(const Rational& x, const Integer& base, std::size_t places);

}  // namespace trapezoid
