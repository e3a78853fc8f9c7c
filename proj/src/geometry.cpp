#include "trapezoid/geometry.hpp"

#include "trapezoid/errors.hpp"
#include "trapezoid/sexagesimal.hpp"

namespace trapezoid {

namespace {

void check_strip_index(std::int64_t k, std::int64_t n) {
    if (n < 1 || k < 0 || k > n) {
        throw DomainError("strip index k=" + std::to_string(k) + " invalid for n=" + std::to_string(n));
    }
}

Rational fraction(std::int64_t k, std::int64_t n) { return make_rational(k, n); }

}  // namespace

Trapezoid::Trapezoid(Rational upper, Rational lower, Rational height)
    : upper_(std::move(upper)), lower_(std::move(lower)), height_(std::move(height)) {
    if (lower_ <= 0 || upper_ < lower_) {
        throw DomainError("trapezoid requires upper >= lower > 0");
    }
    if (height_ <= 0) {
        throw DomainError("trapezoid requires a positive height");
    }
}

QuadraticLength::QuadraticLength(Rational value_sq)
    : square_(std::move(value_sq)), root_(rational_sqrt(square_)) {}

QuadraticLength QuadraticLength::from_square(Rational value_sq) {
    if (value_sq < 0) {
        throw DomainError("squared length is negative: " + to_string(value_sq));
    }
    return QuadraticLength(std::move(value_sq));
}

std::optional<Rational> rational_sqrt(const Rational& x) {
    if (x < 0) {
        return std::nullopt;
    }
    const IntegerRoot num = isqrt(x.get_num());
    if (!num.is_perfect) {
        return std::nullopt;
    }
    const IntegerRoot den = isqrt(x.get_den());
    if (!den.is_perfect) {
        return std::nullopt;
    }
    return make_rational(num.floor_root, den.floor_root);
}

Rational area(const Trapezoid& t) {
    return Rational(t.height() * (t.upper() + t.lower()) / 2);
}

QuadraticLength transversal_bisector(const Rational& a, const Rational& b) {
    if (b <= 0 || a < b) {
        throw DomainError("transversal bisector requires a >= b > 0");
    }
    return QuadraticLength::from_square(Rational((a * a + b * b) / 2));
}

Rational transversal_at(const Trapezoid& t, std::int64_t k, std::int64_t n) {
    check_strip_index(k, n);
    const Rational s = fraction(k, n);
    return Rational((1 - s) * t.upper() + s * t.lower());
}

Rational cumulative_area(const Trapezoid& t, std::int64_t k, std::int64_t n) {
    check_strip_index(k, n);
    const Rational s = fraction(k, n);
    return Rational(s * t.height() / 2 * ((2 - s) * t.upper() + s * t.lower()));
}

Rational complement_area(const Trapezoid& t, std::int64_t k, std::int64_t n) {
    return Rational(area(t) - cumulative_area(t, k, n));
}

QuadraticLength transversal_given_upper_area(const Trapezoid& t, const Rational& upper_area) {
    if (upper_area < 0 || upper_area > area(t)) {
        throw DomainError("upper area " + to_string(upper_area) + " outside [0, " + to_string(area(t)) + "]");
    }
    const Rational& a = t.upper();
    return QuadraticLength::from_square(Rational(a * a - 2 * (a - t.lower()) * upper_area / t.height()));
}

QuadraticLength midpoint_connector(const Trapezoid& t) {
    const Rational half_offset = (t.upper() - t.lower()) / 2;
    return QuadraticLength::from_square(Rational(t.height() * t.height() + half_offset * half_offset));
}

QuadraticLength midpoint_connector_from_leg(const Rational& a, const Rational& b, const Rational& leg) {
    if (b <= 0 || a < b) {
        throw DomainError("midpoint connector requires a >= b > 0");
    }
    const Rational offset = a - b;
    // The leg must exceed the horizontal offset, otherwise the height is zero.
    if (leg <= 0 || leg * leg <= offset * offset) {
        throw DomainError("leg " + to_string(leg) + " too short for bases " + to_string(a) + ", " + to_string(b));
    }
    const Rational half_offset = offset / 2;
    return QuadraticLength::from_square(Rational(leg * leg - 3 * half_offset * half_offset));
}

QuadraticLength triangle_median(const Rational& a, const Rational& b, const Rational& c) {
    if (a <= 0 || b <= 0 || c <= 0 || a + b <= c || b + c <= a || a + c <= b) {
        throw DomainError("sides violate the strict triangle inequality");
    }
    return QuadraticLength::from_square(Rational((2 * a * a + 2 * b * b - c * c) / 4));
}

QuadraticLength triangle_parallel_bisector(const Rational& c) {
    if (c <= 0) {
        throw DomainError("side length must be positive");
    }
    return QuadraticLength::from_square(Rational(c * c / 2));
}

ParallelogramDiagonal parallelogram_diagonal(const Rational& a, const Rational& b, const Rational& h) {
    if (h <= 0 || b <= 0 || h > a) {
        throw DomainError("parallelogram requires 0 < h <= a and b > 0");
    }
    ParallelogramDiagonal out{
        NestedRadical{Rational(a * a + b * b), Rational(2 * b), Rational(a * a - h * h)},
        std::nullopt,
    };
    if (const auto inner = rational_sqrt(out.form.inner_sq)) {
        out.length = QuadraticLength::from_square(Rational(out.form.outer + out.form.coefficient * *inner));
    }
    return out;
}

}  // namespace trapezoid
