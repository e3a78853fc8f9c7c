#include "trapezoid/exact.hpp"

#include "trapezoid/errors.hpp"

#include <algorithm>
#include <cctype>

namespace trapezoid {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

std::string to_string(const Rational& x) { return x.get_str(10); }

std::string to_string(const Integer& x) { return x.get_str(10); }

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_text = body.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num_text) || !all_digits(den_text)) {
        throw SyntaxError("not a rational literal: '" + std::string(text) + "'");
    }
    Integer num(std::string(num_text), 10);
    Integer den(std::string(den_text), 10);
    if (den == 0) {
        throw SyntaxError("zero denominator in '" + std::string(text) + "'");
    }
    if (negative) {
        num = -num;
    }
    return make_rational(num, den);
}

Integer floor_of(const Rational& x) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

}  // namespace trapezoid
