#pragma once

// Which strip of an n-strip partition can serve as a party wall that
// leaves equal areas on both sides.
//
// Strips are numbered 1..n from the upper base. Strip k0 bisects when
// S(k0 - 1) + S(k0) equals the whole area, which expands to
//
//   2(a - b) k0^2 - (4na - 2b + 2a) k0 + n^2(a + b) + 2na + a - b = 0.
//
// With a = r b the discriminant is 4 b^2 ((2n^2 - 1)(r^2 + 1) + 2r), so an
// integral ratio r admits a wall only when that kernel is a perfect square.

#include "trapezoid/exact.hpp"
#include "trapezoid/geometry.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace trapezoid {

// A k^2 + B k + C = 0
struct WallQuadratic {
    Rational A;
    Rational B;
    Rational C;

    Rational evaluate(const Rational& k) const;
    Rational discriminant() const;
};

WallQuadratic wall_quadratic(const Rational& a, const Rational& b, std::int64_t n);

Rational discriminant(const Rational& a, const Rational& b, std::int64_t n);

// (2n^2 - 1)(r^2 + 1) + 2r
Integer discriminant_kernel(std::int64_t r, std::int64_t n);

// Both roots for a = r b, smaller first. Throws IrrationalRoots when the
// kernel is not a perfect square.
std::pair<Rational, Rational> k0_closed_form(std::int64_t r, std::int64_t n);

// Every integral wall index 1 < k0 < n, ascending.
std::vector<std::int64_t> solve_k0(const Rational& a, const Rational& b, std::int64_t n);

// Brute-force check that strips 1..k0-1 and k0+1..n have equal total area.
// Independent of the closed forms above.
bool verify_split(const Trapezoid& t, std::int64_t n, std::int64_t k0);

struct SearchHit {
    std::int64_t r = 0;
    std::int64_t n = 0;
    std::int64_t k0 = 0;
    bool n_regular = false;

    bool operator==(const SearchHit&) const = default;
};

struct SearchRange {
    std::int64_t r_lo = 2;
    std::int64_t r_hi = 20;
    std::int64_t n_lo = 3;
    std::int64_t n_hi = 1000;

    // Number of (r, n) pairs scanned.
    Integer case_count() const;
};

struct SearchOptions {
    bool regular_only = false;
    // r values are dealt out to this many threads; output order does not
    // depend on it.
    unsigned workers = 1;
};

// All hits in (r, n, k0) lexicographic order. Each hit is re-checked with
// verify_split before it is returned.
std::vector<SearchHit> search_hits(const SearchRange& range, const SearchOptions& options = {});

std::vector<SearchHit> search_hits(std::int64_t r_lo, std::int64_t r_hi, std::int64_t n_lo,
                                   std::int64_t n_hi, bool regular_only);

}  // namespace trapezoid
