#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "trapezoid/errors.hpp"
#include "trapezoid/wall_solver.hpp"

#include <doctest.h>

#include <tuple>

using namespace trapezoid;

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }

using Row = std::tuple<std::int64_t, std::int64_t, std::int64_t>;

std::vector<Row> rows(const std::vector<SearchHit>& hits) {
    std::vector<Row> out;
    for (const auto& h : hits) out.emplace_back(h.r, h.n, h.k0);
    return out;
}

}  // namespace

TEST_CASE("wall_quadratic coefficients") {
    const WallQuadratic five = wall_quadratic(q(5), q(1), 10);
    CHECK(five.A == 8);
    CHECK(five.B == -208);
    CHECK(five.C == 704);
    CHECK(five.evaluate(q(4)) == 0);
    CHECK(five.evaluate(q(22)) == 0);

    const WallQuadratic seventeen = wall_quadratic(q(17), q(1), 8);
    CHECK(seventeen.A == 32);
    CHECK(seventeen.B == -576);
    CHECK(seventeen.C == 1440);
    CHECK(seventeen.evaluate(q(3)) == 0);
    CHECK(seventeen.evaluate(q(15)) == 0);

    CHECK_THROWS_AS(wall_quadratic(q(1), q(1), 5), DomainError);
    CHECK_THROWS_AS(wall_quadratic(q(2), q(1), 2), DomainError);
    CHECK_THROWS_AS(wall_quadratic(q(2), q(0), 5), DomainError);
}

TEST_CASE("discriminant") {
    CHECK(discriminant(q(5), q(1), 10) == 20736);
    CHECK(discriminant(q(5), q(1), 10) == wall_quadratic(q(5), q(1), 10).discriminant());
    CHECK(discriminant(q(1), q(1), 2) == 64);
    CHECK(discriminant(q(17), q(1), 8) == 147456);
    CHECK_THROWS_AS(discriminant(q(1), q(1), 1), DomainError);
    CHECK_THROWS_AS(discriminant(q(0), q(1), 4), DomainError);
}

TEST_CASE("discriminant_kernel") {
    CHECK(discriminant_kernel(5, 10) == 5184);
    CHECK(discriminant_kernel(17, 8) == 36864);
    CHECK(discriminant_kernel(2, 3) == 89);
    CHECK(discriminant_kernel(211, 1000) == Integer("89043955900"));
    CHECK_THROWS_AS(discriminant_kernel(1, 10), DomainError);
    CHECK_THROWS_AS(discriminant_kernel(5, 2), DomainError);
    for (std::int64_t b = 1; b <= 5; ++b) {
        CHECK(discriminant(q(5 * b), q(b), 10) == Rational(4 * b * b * discriminant_kernel(5, 10)));
    }
}

TEST_CASE("k0_closed_form") {
    CHECK(k0_closed_form(5, 10) == std::pair{q(4), q(22)});
    CHECK(k0_closed_form(17, 8) == std::pair{q(3), q(15)});
    CHECK_THROWS_AS(k0_closed_form(2, 3), IrrationalRoots);
}

TEST_CASE("solve_k0") {
    CHECK(solve_k0(q(5), q(1), 10) == std::vector<std::int64_t>{4});
    CHECK(solve_k0(q(17), q(1), 8) == std::vector<std::int64_t>{3});
    CHECK(solve_k0(q(2), q(1), 5).empty());
    CHECK(oracle::scan_walls(q(2), q(1), 5).empty());
    CHECK(solve_k0(q(5, 3), q(1, 3), 10) == std::vector<std::int64_t>{4});
    CHECK(solve_k0(q(2), q(1), 10).empty());
    CHECK_THROWS_AS(solve_k0(q(1), q(1), 10), DomainError);
}

TEST_CASE("verify_split") {
    const Trapezoid tablet(q(5, 3), q(1, 3), q(1));
    CHECK(verify_split(tablet, 10, 4));
    CHECK_FALSE(verify_split(tablet, 10, 5));
    CHECK_THROWS_AS(verify_split(Trapezoid(q(1), q(1), q(1)), 5, 3), DomainError);
    CHECK_THROWS_AS(verify_split(tablet, 10, 1), DomainError);
    CHECK_THROWS_AS(verify_split(tablet, 10, 10), DomainError);
}

TEST_CASE("discriminant is positive on the grid") {
    for (std::int64_t r = 2; r <= 50; ++r) {
        for (std::int64_t n = 3; n <= 200; ++n) {
            REQUIRE(discriminant(q(r), q(1), n) > 0);
        }
    }
}

TEST_CASE("B^2 - 4AC equals the discriminant") {
    gen::Source src(10);
    for (int i = 0; i < 600; ++i) {
        const auto [a, b] = src.bases();
        const auto n = src.integer(3, 100);
        REQUIRE(wall_quadratic(a, b, n).discriminant() == discriminant(a, b, n));
    }
}

TEST_CASE("closed-form roots solve the quadratic whenever the kernel is square") {
    int squares = 0;
    for (std::int64_t r = 2; r <= 60; ++r) {
        for (std::int64_t n = 3; n <= 400; ++n) {
            if (!isqrt(discriminant_kernel(r, n)).is_perfect) {
                CHECK_THROWS_AS(k0_closed_form(r, n), IrrationalRoots);
                continue;
            }
            ++squares;
            const auto [low, high] = k0_closed_form(r, n);
            const WallQuadratic wq = wall_quadratic(q(r), q(1), n);
            REQUIRE(wq.evaluate(low) == 0);
            REQUIRE(wq.evaluate(high) == 0);
            REQUIRE(low < high);
        }
    }
    CHECK(squares > 0);
}

TEST_CASE("solve_k0 agrees with an exhaustive strip scan") {
    for (std::int64_t r = 2; r <= 12; ++r) {
        for (std::int64_t n = 3; n <= 40; ++n) {
            const Trapezoid t(q(r), q(1), q(1));
            const auto solved = solve_k0(q(r), q(1), n);
            for (const auto k0 : solved) {
                REQUIRE(verify_split(t, n, k0));
            }
            REQUIRE(solved == oracle::scan_walls(q(r), q(1), n));
        }
    }
}

TEST_CASE("solve_k0 is scale invariant") {
    gen::Source src(11);
    const std::vector<std::pair<std::int64_t, std::int64_t>> known = {{5, 10}, {17, 8}, {12, 11}, {9, 20}, {3, 17}};
    for (int i = 0; i < 600; ++i) {
        const Rational lambda = src.positive_rational(50, 97);
        if (i % 3 == 0) {
            const auto [r, n] = known[static_cast<std::size_t>(i / 3) % known.size()];
            REQUIRE(solve_k0(Rational(lambda * r), lambda, n) == solve_k0(q(r), q(1), n));
            REQUIRE_FALSE(solve_k0(Rational(lambda * r), lambda, n).empty());
        } else {
            const auto [a, b] = src.bases(30);
            const auto n = src.integer(3, 60);
            REQUIRE(solve_k0(Rational(lambda * a), Rational(lambda * b), n) == solve_k0(a, b, n));
        }
    }
}

TEST_CASE("search over the Table 1 range") {
    const std::vector<Row> expected = {{2, 37, 16},  {3, 17, 7},    {3, 305, 117}, {4, 65, 24},  {5, 10, 4},
                                       {6, 25, 9},   {8, 35, 12},   {9, 20, 7},    {12, 11, 4},  {13, 246, 78},
                                       {15, 511, 160}, {17, 8, 3},  {17, 505, 157}, {18, 89, 28}};
    const auto hits = search_hits(2, 20, 3, 1000, false);
    CHECK(rows(hits) == expected);
    CHECK(SearchRange{2, 20, 3, 1000}.case_count() == 18962);

    // n = 8 = 2^3 is regular too, so r = 17 contributes a fourth hit; the
    // three-hit list holds for the ratios r <= 9.
    const auto regular = search_hits(2, 20, 3, 1000, true);
    CHECK(rows(regular) == std::vector<Row>{{5, 10, 4}, {6, 25, 9}, {9, 20, 7}, {17, 8, 3}});
    for (const auto& h : regular) CHECK(h.n_regular);
    CHECK(rows(search_hits(2, 9, 3, 1000, true)) == std::vector<Row>{{5, 10, 4}, {6, 25, 9}, {9, 20, 7}});
}

TEST_CASE("search over r = 2..211") {
    // Frozen from an independent exhaustive scan (integer square roots of the
    // kernel, exact divisibility of both roots).
    const std::vector<Row> beyond_table = {
        {21, 194, 60},  {28, 183, 56},  {37, 261, 79},  {39, 551, 166}, {43, 609, 183}, {45, 319, 96},
        {46, 15, 5},    {57, 52, 16},   {70, 69, 21},   {76, 123, 37},  {78, 595, 177}, {81, 1000, 297},
        {93, 782, 232}, {98, 485, 144}, {99, 49, 15},   {105, 509, 151}, {127, 791, 234}, {133, 22, 7},
        {148, 273, 81}, {157, 39, 12},  {172, 555, 164}, {173, 314, 93}, {211, 175, 52}};
    const auto hits = search_hits(SearchRange{21, 211, 3, 1000}, {false, 2});
    CHECK(rows(hits) == beyond_table);
    CHECK(SearchRange{2, 211, 3, 1000}.case_count() == 209580);
}

TEST_CASE("search output does not depend on the worker count") {
    const SearchRange range{2, 40, 3, 400};
    const auto sequential = search_hits(range, {false, 1});
    CHECK(search_hits(range, {false, 3}) == sequential);
    CHECK(search_hits(range, {false, 8}) == sequential);
}

TEST_CASE("search rejects bad ranges") {
    CHECK_THROWS_AS(search_hits(1, 5, 3, 10, false), DomainError);
    CHECK_THROWS_AS(search_hits(5, 4, 3, 10, false), DomainError);
    CHECK_THROWS_AS(search_hits(2, 5, 2, 10, false), DomainError);
    CHECK_THROWS_AS(search_hits(2, 5, 9, 8, false), DomainError);
}
