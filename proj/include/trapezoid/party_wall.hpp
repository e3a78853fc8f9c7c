#pragma once

// Dividing a trapezoid between two heirs with a party wall: strip k0 of an
// n-strip partition is the wall, strips above it go to one share and
// strips below it to the other.

#include "trapezoid/exact.hpp"
#include "trapezoid/geometry.hpp"
#include "trapezoid/sexagesimal.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace trapezoid {

struct PartyWallPlan {
    Rational left_edge;        // c, the transversal d(k0 - 1)
    Rational right_edge;       // e, the transversal d(k0)
    Rational midline;          // (c + e) / 2
    Rational edge_difference;  // c - e
    Rational thickness;        // h / n
    Rational left_height;      // (k0 - 1) h / n
    Rational right_height;     // (n - k0) h / n
    Rational left_area;
    Rational wall_area;
    Rational right_area;

    bool shares_equal() const { return left_area == right_area; }
};

// Horizontal offset between the two edges of a wall of the given
// thickness: thickness * (a - b) / h.
Rational wall_offset(const Trapezoid& t, const Rational& thickness);

// Requires a > b, n >= 3 and 1 < k0 < n. Equal shares are not required;
// check shares_equal() on the result.
PartyWallPlan plan_wall(const Trapezoid& t, std::int64_t n, std::int64_t k0);

struct TraceStep {
    std::string label;        // tablet line, e.g. "rev. L6"
    std::string description;
    Rational value;
    SexValue sex;
    bool truncated = false;   // value is a truncated square root, not exact
};

// Reverse lines 5-17: wall of thickness 0;6 in the 1;40 / 0;20 / 1 trapezoid.
std::vector<TraceStep> scribe_trace_smt26();

// Obverse lines 2-6: transversal below an upper part of area 4,30,0 in the
// 2,10 / 30 / 3,45 trapezoid.
std::vector<TraceStep> scribe_trace_obverse1();

}  // namespace trapezoid
