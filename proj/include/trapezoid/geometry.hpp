#pragma once

// Closed-form bisector formulas for trapezoids and the classical figures.
// Irrational lengths are carried exactly as their squares.

#include "trapezoid/exact.hpp"

#include <cstdint>
#include <optional>

namespace trapezoid {

// Trapezoid with the longer base a on top, shorter base b below and
// height h. Requires a >= b > 0 and h > 0.
class Trapezoid {
public:
    Trapezoid(Rational upper, Rational lower, Rational height);

    const Rational& upper() const { return upper_; }
    const Rational& lower() const { return lower_; }
    const Rational& height() const { return height_; }

private:
    Rational upper_;
    Rational lower_;
    Rational height_;
};

// A length known through its exact square.
class QuadraticLength {
public:
    // Throws DomainError when value_sq < 0.
    static QuadraticLength from_square(Rational value_sq);

    const Rational& square() const { return square_; }
    const std::optional<Rational>& exact_root() const { return root_; }
    bool is_exact() const { return root_.has_value(); }

private:
    explicit QuadraticLength(Rational value_sq);

    Rational square_;
    std::optional<Rational> root_;
};

// The non-negative rational square root of x, when x is a perfect rational
// square.
std::optional<Rational> rational_sqrt(const Rational& x);

Rational area(const Trapezoid& t);

// sqrt((a^2 + b^2) / 2): the transversal splitting the area in half.
QuadraticLength transversal_bisector(const Rational& a, const Rational& b);

// d_k = (1 - k/n) a + (k/n) b, for 0 <= k <= n.
Rational transversal_at(const Trapezoid& t, std::int64_t k, std::int64_t n);

// Area of the first k of n equal-height strips, measured from the upper base.
Rational cumulative_area(const Trapezoid& t, std::int64_t k, std::int64_t n);

// Area of the strips k+1..n.
Rational complement_area(const Trapezoid& t, std::int64_t k, std::int64_t n);

// Transversal cutting off an upper part of area upper_area:
// d^2 = a^2 - 2(a - b) upper_area / h.
QuadraticLength transversal_given_upper_area(const Trapezoid& t, const Rational& upper_area);

// Segment joining the midpoints of the bases of a right trapezoid.
QuadraticLength midpoint_connector(const Trapezoid& t);

// Same segment from the slant leg c, where c^2 = h^2 + (a - b)^2.
QuadraticLength midpoint_connector_from_leg(const Rational& a, const Rational& b, const Rational& leg);

// Median onto side c of the triangle with sides a, b, c.
QuadraticLength triangle_median(const Rational& a, const Rational& b, const Rational& c);

// Transversal parallel to side c that halves the triangle's area.
QuadraticLength triangle_parallel_bisector(const Rational& c);

// sqrt(outer + coefficient * sqrt(inner_sq))
struct NestedRadical {
    Rational outer;
    Rational coefficient;
    Rational inner_sq;
};

struct ParallelogramDiagonal {
    NestedRadical form;
    // Present when inner_sq is a perfect rational square.
    std::optional<QuadraticLength> length;
};

// Long diagonal of a parallelogram with sides a, b and height h onto b.
ParallelogramDiagonal parallelogram_diagonal(const Rational& a, const Rational& b, const Rational& h);

}  // namespace trapezoid
