#include "support/generators.hpp"
#include "support/oracles.hpp"

#include "trapezoid/errors.hpp"
#include "trapezoid/party_wall.hpp"
#include "trapezoid/wall_solver.hpp"

#include <doctest.h>

#include <algorithm>

using namespace trapezoid;

namespace {

Rational q(std::int64_t num, std::int64_t den = 1) { return make_rational(num, den); }
Rational sex(const char* text) { return sex_to_rational(parse_sex(text)); }

const Trapezoid kTablet(q(5, 3), q(1, 3), q(1));

std::vector<std::string> rendered(const std::vector<TraceStep>& steps) {
    std::vector<std::string> out;
    for (const auto& s : steps) out.push_back(format_sex(s.sex));
    return out;
}

}  // namespace

TEST_CASE("wall_offset") {
    CHECK(wall_offset(kTablet, q(1, 10)) == q(2, 15));
    CHECK(wall_offset(kTablet, q(1, 10)) == sex("0;8"));
    CHECK(wall_offset(Trapezoid(q(3), q(3), q(2)), q(1, 2)) == 0);
    CHECK(wall_offset(Trapezoid(q(130), q(30), q(225)), q(225, 10)) == 10);
    CHECK_THROWS_AS(wall_offset(kTablet, q(0)), DomainError);
    CHECK_THROWS_AS(wall_offset(kTablet, q(1)), DomainError);
}

TEST_CASE("plan_wall on the tablet data") {
    const PartyWallPlan p = plan_wall(kTablet, 10, 4);
    CHECK(p.left_edge == q(19, 15));
    CHECK(p.right_edge == q(17, 15));
    CHECK(p.midline == q(6, 5));
    CHECK(p.edge_difference == q(2, 15));
    CHECK(p.left_height == q(3, 10));
    CHECK(p.thickness == q(1, 10));
    CHECK(p.right_height == q(3, 5));
    CHECK(p.wall_area == q(3, 25));
    CHECK(p.left_area == q(11, 25));
    CHECK(p.right_area == q(11, 25));
    CHECK(p.shares_equal());

    CHECK(p.left_edge == sex("1;16"));
    CHECK(p.right_edge == sex("1;8"));
    CHECK(p.midline == sex("1;12"));
    CHECK(p.left_height == sex("0;18"));
    CHECK(p.right_height == sex("0;36"));
    CHECK(p.wall_area == sex("0;7,12"));
    CHECK(p.left_area == sex("0;26,24"));
    CHECK(p.left_area + p.wall_area + p.right_area == 1);
}

TEST_CASE("plan_wall reports unequal shares without failing") {
    const Trapezoid t(q(5), q(1), q(2));
    const PartyWallPlan p = plan_wall(t, 10, 5);
    CHECK_FALSE(p.shares_equal());
    CHECK(p.left_area == oracle::strip_sum(q(5), q(1), q(2), 1, 4, 10));
    CHECK(p.right_area == oracle::strip_sum(q(5), q(1), q(2), 6, 10, 10));
}

TEST_CASE("plan_wall rejects invalid input") {
    CHECK_THROWS_AS(plan_wall(Trapezoid(q(1), q(1), q(1)), 10, 4), DomainError);
    CHECK_THROWS_AS(plan_wall(kTablet, 2, 1), DomainError);
    CHECK_THROWS_AS(plan_wall(kTablet, 10, 1), DomainError);
    CHECK_THROWS_AS(plan_wall(kTablet, 10, 10), DomainError);
}

TEST_CASE("plan invariants on random walls") {
    gen::Source src(21);
    for (int i = 0; i < 600; ++i) {
        const auto [a, b] = src.bases(60);
        const Rational h = src.positive_rational(30);
        const Trapezoid t(a, b, h);
        const auto n = src.integer(3, 40);
        const auto k0 = src.integer(2, n - 1);
        const PartyWallPlan p = plan_wall(t, n, k0);

        REQUIRE(p.left_area + p.wall_area + p.right_area == area(t));
        REQUIRE(p.left_height + p.thickness + p.right_height == h);
        REQUIRE(p.midline == (p.left_edge + p.right_edge) / 2);
        REQUIRE(p.midline == transversal_at(t, 2 * k0 - 1, 2 * n));
        REQUIRE(p.left_edge - p.right_edge == wall_offset(t, Rational(h / n)));
        REQUIRE(p.left_edge == p.midline + p.edge_difference / 2);
        REQUIRE(p.right_edge == p.midline - p.edge_difference / 2);
        REQUIRE(p.edge_difference == p.thickness * (a - b) / h);
        REQUIRE(p.wall_area == p.thickness * p.midline);
        REQUIRE(p.wall_area == oracle::strip(a, b, h, k0, n));
    }
}

TEST_CASE("equal shares exactly at solver hits") {
    for (std::int64_t r = 2; r <= 20; ++r) {
        for (std::int64_t n = 3; n <= 40; ++n) {
            const Trapezoid t(q(r), q(1), q(3, 2));
            const auto walls = solve_k0(q(r), q(1), n);
            for (std::int64_t k0 = 2; k0 < n; ++k0) {
                const bool hit = std::find(walls.begin(), walls.end(), k0) != walls.end();
                REQUIRE(plan_wall(t, n, k0).shares_equal() == hit);
            }
        }
    }
}

TEST_CASE("the truncated bisector equals the exact midline on the tablet data") {
    const Rational truncated = sex_to_rational(sqrt_sex(transversal_bisector(q(5, 3), q(1, 3)).square(), 1));
    CHECK(truncated == q(6, 5));
    CHECK(plan_wall(kTablet, 10, 4).midline == truncated);
}

TEST_CASE("reverse trace reproduces the tablet numbers") {
    const auto steps = scribe_trace_smt26();
    CHECK(rendered(steps) == std::vector<std::string>{"1;20", "0;8", "0;4", "2;46,40", "0;6,40", "2;53,20",
                                                      "1;26,40", "1;12", "1;16", "1;8", "1;28", "0;7,12",
                                                      "0;52,48", "0;26,24", "2;56", "0;52,48", "0;26,24"});
    for (const auto& s : steps) {
        CAPTURE(s.description);
        CHECK(sex_to_rational(s.sex) == s.value);
        CHECK(s.truncated == (s.description.find("truncated") != std::string::npos));
    }
    CHECK(steps[3].description == "square of upper width");
    CHECK(steps[3].value == q(25, 9));
    CHECK(steps[5].description == "sum of squares");
    CHECK(steps[5].value == q(26, 9));
    CHECK(steps[7].truncated);
    CHECK(steps[7].label == "rev. L9-10");
    CHECK(steps.back().value == q(11, 25));
    CHECK(steps[13].value == q(11, 25));
    CHECK(steps[13].value + steps[11].value + steps.back().value == 1);
}

TEST_CASE("obverse trace reproduces the tablet numbers") {
    const auto steps = scribe_trace_obverse1();
    CHECK(rendered(steps) ==
          std::vector<std::string>{"1,40", "0;0,16", "0;26,40", "0;53,20", "4,0,0", "4,41,40", "41,40", "50"});
    CHECK(steps[1].description == "reciprocal of 3,45 of the length");
    CHECK(steps[1].value == q(1, 225));
    CHECK(steps[6].value == 2500);
    CHECK(steps.back().value == 50);
    for (const auto& s : steps) {
        CHECK_FALSE(s.truncated);
        CHECK(sex_to_rational(s.sex) == s.value);
    }
}
