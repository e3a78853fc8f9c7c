#include "trapezoid/party_wall.hpp"

#include "trapezoid/errors.hpp"

namespace trapezoid {

namespace {

class Trace {
public:
    // Records an exact step; the value must have a finite sexagesimal form.
    const Rational& step(std::string label, std::string description, Rational value) {
        SexValue sex = rational_to_sex(value, 20);
        steps_.push_back({std::move(label), std::move(description), std::move(value), std::move(sex), false});
        return steps_.back().value;
    }

    // Records sqrt(radicand) cut to the given number of places.
    Rational root(std::string label, std::string description, const Rational& radicand, std::size_t places) {
        SexValue sex = sqrt_sex(radicand, places);
        Rational value = sex_to_rational(sex);
        const bool exact = value * value == radicand;
        steps_.push_back({std::move(label), std::move(description), value, std::move(sex), !exact});
        return value;
    }

    std::vector<TraceStep> release() { return std::move(steps_); }

private:
    std::vector<TraceStep> steps_;
};

Rational sex(std::string_view text) { return sex_to_rational(parse_sex(text)); }

}  // namespace

Rational wall_offset(const Trapezoid& t, const Rational& thickness) {
    if (thickness <= 0 || thickness >= t.height()) {
        throw DomainError("wall thickness must lie strictly between 0 and the height");
    }
    return Rational(thickness * (t.upper() - t.lower()) / t.height());
}

PartyWallPlan plan_wall(const Trapezoid& t, std::int64_t n, std::int64_t k0) {
    if (t.upper() == t.lower()) {
        throw DomainError("party wall requires a > b");
    }
    if (n < 3 || k0 <= 1 || k0 >= n) {
        throw DomainError("party wall requires n >= 3 and 1 < k0 < n");
    }
    const Rational& h = t.height();
    PartyWallPlan plan;
    plan.left_edge = transversal_at(t, k0 - 1, n);
    plan.right_edge = transversal_at(t, k0, n);
    plan.midline = (plan.left_edge + plan.right_edge) / 2;
    plan.thickness = h / make_rational(n);
    plan.edge_difference = wall_offset(t, plan.thickness);
    plan.left_height = make_rational(k0 - 1, n) * h;
    plan.right_height = make_rational(n - k0, n) * h;
    plan.left_area = cumulative_area(t, k0 - 1, n);
    plan.wall_area = plan.thickness * plan.midline;
    plan.right_area = complement_area(t, k0, n);
    return plan;
}

std::vector<TraceStep> scribe_trace_smt26() {
    const Rational upper = sex("1;40");
    const Rational lower = sex("0;20");
    const Rational thickness = sex("0;6");
    const Rational left_height = sex("0;18");
    const Rational right_height = sex("0;36");

    Trace trace;
    const Rational excess = trace.step("rev. L5", "1;40 of the upper width exceeds 0;20 of the lower width",
                                       Rational(upper - lower));
    const Rational offset = trace.step("rev. L6", "multiply the excess by 0;6 of the party wall: edge difference",
                                       Rational(excess * thickness));
    const Rational half_offset = trace.step("rev. L6", "break the edge difference in two", Rational(offset / 2));
    const Rational upper_sq = trace.step("rev. L7", "square of upper width", Rational(upper * upper));
    const Rational lower_sq = trace.step("rev. L8", "square of lower width", Rational(lower * lower));
    const Rational sum_sq = trace.step("rev. L8-9", "sum of squares", Rational(upper_sq + lower_sq));
    const Rational half_sum = trace.step("rev. L9", "half of the sum of squares", Rational(sum_sq / 2));
    const Rational midline = trace.root(
        "rev. L9-10", "square root, truncated to one place; put down for the 'width' of the party wall", half_sum, 1);
    const Rational left_edge = trace.step("rev. L17", "left edge c: midline plus half the edge difference",
                                          Rational(midline + half_offset));
    const Rational right_edge = trace.step("rev. L13", "right edge e: midline minus half the edge difference",
                                           Rational(midline - half_offset));
    const Rational right_sum = trace.step("rev. L13", "right edge plus lower width", Rational(right_edge + lower));
    trace.step("rev. L14-15", "area of the party wall: 0;6 times the midline", Rational(thickness * midline));
    const Rational right_double = trace.step("rev. L16", "0;36 times the sum (right share, doubled)",
                                             Rational(right_height * right_sum));
    trace.step("rev. L16", "half: right share", Rational(right_double / 2));
    const Rational left_sum = trace.step("rev. L17", "upper width plus left edge", Rational(upper + left_edge));
    const Rational left_double = trace.step("rev. L17", "0;18 times the sum (left share, doubled)",
                                            Rational(left_height * left_sum));
    trace.step("rev. L17", "half: left share", Rational(left_double / 2));
    return trace.release();
}

std::vector<TraceStep> scribe_trace_obverse1() {
    const Rational upper = sex("2,10");
    const Rational lower = sex("30");
    const Rational length = sex("3,45");
    const Rational upper_area = sex("4,30,0");

    Trace trace;
    const Rational excess = trace.step("obv. L2", "2,10 of the upper width exceeds 30 of the lower width",
                                       Rational(upper - lower));
    const Rational reciprocal =
        trace.step("obv. L3", "reciprocal of 3,45 of the length", reciprocal_regular(length.get_num()));
    const Rational slope = trace.step("obv. L3", "multiply the reciprocal by the excess", Rational(reciprocal * excess));
    const Rational doubled = trace.step("obv. L4", "2 times", Rational(2 * slope));
    const Rational drop = trace.step("obv. L4", "multiply by 4,30,0 of the upper area", Rational(doubled * upper_area));
    const Rational upper_sq = trace.step("obv. L5", "square of upper width", Rational(upper * upper));
    const Rational radicand = trace.step("obv. L6", "subtract", Rational(upper_sq - drop));
    trace.root("obv. L6", "square root: the dividing transversal", radicand, 0);
    return trace.release();
}

}  // namespace trapezoid
