#include "trapezoid/sexagesimal.hpp"

#include "trapezoid/errors.hpp"

#include <algorithm>
#include <cctype>

namespace trapezoid {

namespace {

constexpr int kBase = 60;

void check_digits(const std::vector<int>& digits) {
    for (const int d : digits) {
        if (d < 0 || d >= kBase) {
            throw DomainError("sexagesimal digit out of range: " + std::to_string(d));
        }
    }
}

Integer power(long base, std::size_t exp) {
    Integer out;
    mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), exp);
    return out;
}

// Parses "d,d,...,d". Digits are 0..59 without leading zeros.
std::vector<int> parse_digit_groups(std::string_view text, std::string_view whole) {
    std::vector<int> digits;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view group =
            text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        if (group.empty()) {
            throw SyntaxError("empty digit group in '" + std::string(whole) + "'");
        }
        if (!std::all_of(group.begin(), group.end(),
                         [](unsigned char c) { return std::isdigit(c) != 0; })) {
            throw SyntaxError("non-digit character in '" + std::string(whole) + "'");
        }
        if (group.size() > 1 && group.front() == '0') {
            throw SyntaxError("leading zero in digit '" + std::string(group) + "'");
        }
        if (group.size() > 2) {
            throw SyntaxError("digit '" + std::string(group) + "' is not below 60");
        }
        const int value = std::stoi(std::string(group));
        if (value >= kBase) {
            throw SyntaxError("digit '" + std::string(group) + "' is not below 60");
        }
        digits.push_back(value);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return digits;
}

// Splits |x| = whole + frac/60^places with places digits, truncating.
SexValue digits_of(const Rational& x, std::size_t places) {
    const int sign = sgn(x) < 0 ? -1 : 1;
    const Rational magnitude = abs(x);
    const Integer scale = power(kBase, places);
    const Integer scaled = floor_of(Rational(magnitude * scale));

    Integer whole = scaled / scale;
    Integer frac = scaled % scale;

    std::vector<int> frac_digits(places, 0);
    for (std::size_t i = places; i-- > 0;) {
        frac_digits[i] = static_cast<int>(Integer(frac % kBase).get_si());
        frac /= kBase;
    }
    std::vector<int> int_digits;
    while (whole > 0) {
        int_digits.push_back(static_cast<int>(Integer(whole % kBase).get_si()));
        whole /= kBase;
    }
    std::reverse(int_digits.begin(), int_digits.end());
    return SexValue(sign, std::move(int_digits), std::move(frac_digits));
}

}  // namespace

SexValue::SexValue() = default;

SexValue::SexValue(int sign, std::vector<int> int_digits, std::vector<int> frac_digits)
    : sign_(sign < 0 ? -1 : 1), int_digits_(std::move(int_digits)), frac_digits_(std::move(frac_digits)) {
    check_digits(int_digits_);
    check_digits(frac_digits_);
    const auto first = std::find_if(int_digits_.begin(), int_digits_.end(), [](int d) { return d != 0; });
    int_digits_.erase(int_digits_.begin(), first);
    if (int_digits_.empty()) {
        int_digits_.push_back(0);
    }
    while (!frac_digits_.empty() && frac_digits_.back() == 0) {
        frac_digits_.pop_back();
    }
    if (is_zero()) {
        sign_ = 1;
    }
}

bool SexValue::is_zero() const {
    return int_digits_.size() == 1 && int_digits_.front() == 0 && frac_digits_.empty();
}

SexValue parse_sex(std::string_view text) {
    std::string_view body = text;
    int sign = 1;
    if (!body.empty() && body.front() == '-') {
        sign = -1;
        body.remove_prefix(1);
    }
    if (body.empty()) {
        throw SyntaxError("empty sexagesimal numeral");
    }
    const std::size_t semi = body.find(';');
    std::vector<int> int_digits = parse_digit_groups(body.substr(0, semi), text);
    std::vector<int> frac_digits;
    if (semi != std::string_view::npos) {
        frac_digits = parse_digit_groups(body.substr(semi + 1), text);
    }
    return SexValue(sign, std::move(int_digits), std::move(frac_digits));
}

std::string format_sex(const SexValue& v) {
    std::string out;
    if (v.sign() < 0) {
        out += '-';
    }
    const auto append = [&out](const std::vector<int>& digits) {
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += std::to_string(digits[i]);
        }
    };
    append(v.int_digits());
    if (!v.frac_digits().empty()) {
        out += ';';
        append(v.frac_digits());
    }
    return out;
}

Rational sex_to_rational(const SexValue& v) {
    Integer whole = 0;
    for (const int d : v.int_digits()) {
        whole = whole * kBase + d;
    }
    Integer frac = 0;
    for (const int d : v.frac_digits()) {
        frac = frac * kBase + d;
    }
    Rational out = make_rational(whole * power(kBase, v.frac_digits().size()) + frac,
                                 power(kBase, v.frac_digits().size()));
    return v.sign() < 0 ? Rational(-out) : out;
}

std::optional<std::size_t> sex_places_needed(const Rational& x) {
    // den | 60^k  <=>  for each of 2, 3, 5 the exponent fits: 2^(2k), 3^k, 5^k.
    const auto factors = is_regular(x.get_den());
    if (!factors) {
        return std::nullopt;
    }
    return std::max<std::size_t>({(factors->p + 1) / 2, factors->q, factors->r});
}

SexValue rational_to_sex(const Rational& x, std::size_t max_frac_places) {
    const auto needed = sex_places_needed(x);
    if (!needed) {
        throw NonTerminating(to_string(x) + " has no finite sexagesimal expansion");
    }
    if (*needed > max_frac_places) {
        throw PlacesExceeded(to_string(x) + " needs " + std::to_string(*needed) +
                             " sexagesimal places, " + std::to_string(max_frac_places) + " allowed");
    }
    return digits_of(x, *needed);
}

SexValue truncate_to_sex(const Rational& x, std::size_t frac_places) {
    return digits_of(x, frac_places);
}

std::optional<RegularFactorization> is_regular(const Integer& m) {
    if (m < 1) {
        throw DomainError("regularity is defined for positive integers only");
    }
    RegularFactorization f;
    Integer rest = m;
    const auto strip = [&rest](unsigned long prime, unsigned& exponent) {
        while (mpz_divisible_ui_p(rest.get_mpz_t(), prime) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), prime);
            ++exponent;
        }
    };
    strip(2, f.p);
    strip(3, f.q);
    strip(5, f.r);
    if (rest != 1) {
        return std::nullopt;
    }
    return f;
}

Rational reciprocal_regular(const Integer& m) {
    if (!is_regular(m)) {
        throw NotRegular(to_string(m) + " is not a regular number");
    }
    return make_rational(Integer(1), m);
}

IntegerRoot isqrt(const Integer& m) {
    if (m < 0) {
        throw DomainError("square root of a negative integer");
    }
    if (m < 2) {
        return {m, true};
    }
    // Newton from above: start at 2^ceil(bits/2) >= sqrt(m); the iterate
    // decreases monotonically until it reaches floor(sqrt(m)).
    const std::size_t bits = mpz_sizeinbase(m.get_mpz_t(), 2);
    Integer x;
    mpz_setbit(x.get_mpz_t(), (bits + 1) / 2);
    while (true) {
        Integer y = (x + m / x) / 2;
        if (y >= x) {
            break;
        }
        x = std::move(y);
    }
    return {x, x * x == m};
}

Rational truncated_sqrt(const Rational& x, const Integer& base, std::size_t places) {
    if (x < 0) {
        throw DomainError("square root of a negative value");
    }
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), base.get_mpz_t(), places);
    // floor(sqrt(y)) == floor(sqrt(floor(y))) for y >= 0.
    const Integer radicand = floor_of(Rational(x * scale * scale));
    return make_rational(isqrt(radicand).floor_root, scale);
}

SexValue sqrt_sex(const Rational& x, std::size_t frac_places) {
    return digits_of(truncated_sqrt(x, Integer(kBase), frac_places), frac_places);
}

}  // namespace trapezoid
