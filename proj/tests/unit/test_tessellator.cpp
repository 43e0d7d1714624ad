#include <polarstroke/auditor.hpp>
#include <polarstroke/diffgeo.hpp>
#include <polarstroke/error.hpp>
#include <polarstroke/intervals.hpp>
#include <polarstroke/tessellator.hpp>

#include "corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace polarstroke;
using polarstroke::testing::Corpus;
using polarstroke::testing::kDegree;

namespace {

constexpr double kPi = std::numbers::pi;

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::MismatchedInputs;
}

StrokeStyle style(double w, double q_deg) {
    StrokeStyle s;
    s.width = w;
    s.quality = q_deg * kDegree;
    return s;
}

TangentInterval only_interval(const PathSegment& seg) {
    auto split = split_segment(seg);
    REQUIRE(split.intervals.size() == 1);
    return split.intervals[0];
}

} // namespace

TEST_SUITE("tessellator") {

TEST_CASE("style validation") {
    CHECK_NOTHROW(style(1, 4).validate());
    CHECK_NOTHROW(style(1, 89.9).validate());
    for (StrokeStyle s : {style(0, 4), style(-1, 4), style(std::nan(""), 4), style(INFINITY, 4), style(1, 0),
                          style(1, -3), style(1, 90), style(1, 120)})
        CHECK(code_of([&] { s.validate(); }) == ErrorCode::InvalidStyle);
}

TEST_CASE("plan steps") {
    StepPlan p = plan_steps(90 * kDegree, 4 * kDegree);
    CHECK(p.steps == 23);
    CHECK(p.theta / kDegree == doctest::Approx(3.91304347826).epsilon(1e-10));
    p = plan_steps(0.0, 7 * kDegree);
    CHECK(p.steps == 1);
    CHECK(p.theta == 0.0);
    p = plan_steps(15 * kDegree, 15 * kDegree);
    CHECK(p.steps == 1);
    CHECK(p.theta == 15 * kDegree);
    p = plan_steps(kPi / 2, kPi / 2);
    CHECK(p.steps == 1);
    p = plan_steps(-50 * kDegree, 4 * kDegree);
    CHECK(p.steps == 13);
    CHECK(p.theta < 0);
    CHECK(code_of([] { plan_steps(kPi, 0.1); }) == ErrorCode::RotationTooLarge);
    CHECK(code_of([] { plan_steps(-4.0, 0.1); }) == ErrorCode::RotationTooLarge);

    Corpus corpus(8);
    for (int i = 0; i < 2000; ++i) {
        const double r = corpus.uniform(-kPi + 1e-6, kPi - 1e-6);
        const double q = corpus.uniform(0.5, 15.0) * kDegree;
        const StepPlan s = plan_steps(r, q);
        CHECK(std::abs(s.theta) <= q);
        CHECK(s.steps == std::max(1, static_cast<int>(std::ceil(std::abs(r) / q))));
        CHECK(std::abs(s.theta * s.steps - r) <= 1e-15 * s.steps);
    }
}

TEST_CASE("solve angle parameter") {
    const PathSegment seg = testing::quarter_circle();
    const TangentInterval iv = only_interval(seg);
    CHECK(std::abs(solve_angle_parameter(seg, iv, iv.psi_lo + kPi / 4) - 0.5) < 1e-9);
    CHECK(solve_angle_parameter(seg, iv, iv.psi_lo) == iv.t_lo);
    CHECK(solve_angle_parameter(seg, iv, iv.psi_hi) == iv.t_hi);

    const double t = solve_angle_parameter(seg, iv, iv.psi_lo + 30 * kDegree);
    const Point2 p = evaluate(seg, t);
    CHECK(std::abs(std::atan2(p.y, p.x) / kDegree - 30.0) < 1e-7);

    CHECK(code_of([&] { solve_angle_parameter(seg, iv, iv.psi_hi + 0.01); }) == ErrorCode::TargetOutOfInterval);
    CHECK(code_of([&] { solve_angle_parameter(seg, iv, iv.psi_lo - 0.01); }) == ErrorCode::TargetOutOfInterval);
}

TEST_CASE("tessellate interval") {
    const PathSegment circle = testing::quarter_circle();
    const auto ribs = tessellate_interval(circle, only_interval(circle), style(4, 4));
    REQUIRE(ribs.size() == 24);
    for (const Rib& r : ribs) {
        CHECK(std::abs(norm(r.P) - 12.0) < 1e-9);
        CHECK(std::abs(norm(r.N) - 8.0) < 1e-9);
    }
    CHECK(ribs.front().t == 0.0);
    CHECK(ribs.back().t == 1.0);

    const PathSegment line = PathSegment::line({0, 0}, {3, 4});
    const auto lr = tessellate_interval(line, only_interval(line), style(2, 10));
    REQUIRE(lr.size() == 2);
    CHECK(lr[0].unit_normal == lr[1].unit_normal);
    CHECK(lr[0].g == line.start());
    CHECK(lr[1].g == line.end());

    // q = 90 degrees is outside the style contract; a single 90 degree step is a plan question.
    CHECK(code_of([&] { tessellate_interval(circle, only_interval(circle), style(4, 90)); }) ==
          ErrorCode::InvalidStyle);
    CHECK(plan_steps(only_interval(circle).rotation, kPi / 2).steps == 1);
}

TEST_CASE("generator cusp fan") {
    const PathSegment seg = testing::cusp_cubic();
    const GeneratorCusp cusp = split_segment(seg).cusps.at(0);
    CHECK(fan_plan(cusp, kPi / 2).steps == 2);
    const StepPlan plan = fan_plan(cusp, 4 * kDegree);
    CHECK(plan.steps == 45);
    CHECK(std::abs(std::abs(plan.theta) * plan.steps - kPi) < 1e-12);

    const auto fan = tessellate_generator_cusp(cusp, style(2, 4));
    REQUIRE(fan.size() == 46);
    for (const Rib& r : fan) {
        CHECK(distance(r.g, {1, 1.5}) < 1e-9);
        CHECK(r.origin == RibOrigin::CuspFan);
        CHECK(std::abs(distance(r.P, r.g) - 1.0) < 1e-12);
    }
    const Point2 n_in = rotate_cw(direction(cusp.psi_in));
    CHECK(distance(fan.front().unit_normal, n_in) < 1e-12);
    CHECK(distance(fan.back().unit_normal, n_in * -1.0) < 1e-12);
    for (std::size_t j = 1; j < fan.size(); ++j) {
        CHECK(std::abs(fan[j].psi - fan[j - 1].psi - plan.theta) < 1e-12);
        const double turn = std::atan2(cross(fan[j - 1].unit_normal, fan[j].unit_normal),
                                       dot(fan[j - 1].unit_normal, fan[j].unit_normal));
        CHECK(std::abs(turn - plan.theta) < 1e-12);
    }
}

TEST_CASE("tessellate path") {
    Quadrangulation line = tessellate_path(Path({PathSegment::line({0, 0}, {10, 0})}), style(1, 4));
    CHECK(line.ribs.size() == 2);
    CHECK(line.edges.size() == 1);

    Quadrangulation circle = tessellate_path(Path({testing::quarter_circle()}), style(4, 4));
    CHECK(circle.ribs.size() == 24);
    CHECK(circle.edges.size() == 23);

    const Path cusp_path({testing::cusp_cubic()});
    Quadrangulation q = tessellate_path(cusp_path, style(2, 4));
    REQUIRE(q.fans.size() == 1);
    REQUIRE(q.intervals.size() == 2);
    const int pre = q.interval_plans[0].steps + 1;
    const int post = q.interval_plans[1].steps + 1;
    const int fan = q.fans[0].plan.steps + 1;
    CHECK(q.ribs.size() == static_cast<std::size_t>(pre + fan + post - 2));
    std::size_t fan_ribs = 0;
    for (const Rib& r : q.ribs)
        if (r.origin == RibOrigin::CuspFan) {
            ++fan_ribs;
            CHECK(r.g == q.fans[0].cusp.position);
        }
    // The entry rib merges into the interval's last rib, the exit rib survives the merge.
    CHECK(fan_ribs == static_cast<std::size_t>(fan - 1));
    CHECK(q.path_fingerprint == cusp_path.fingerprint());
}

TEST_CASE("multi-segment path merges junction ribs") {
    const Path p = parse_svg_path("M 0 0 Q 10 10 20 0 Q 30 -10 40 0");
    const Quadrangulation q = tessellate_path(p, style(1, 5));
    for (std::size_t i = 1; i < q.ribs.size(); ++i) {
        const Rib& a = q.ribs[i - 1];
        const Rib& b = q.ribs[i];
        const bool same = distance(a.g, b.g) <= 1e-9 && distance(a.P, b.P) <= 1e-9 && distance(a.N, b.N) <= 1e-9;
        CHECK_FALSE(same);
    }
}

TEST_CASE("random corpus: uniform steps, threshold, offsets") {
    Corpus corpus(31337);
    for (int i = 0; i < 200; ++i) {
        const Path path({corpus.mixed(static_cast<std::size_t>(i))});
        const StrokeStyle st = corpus.style();
        const Quadrangulation q = tessellate_path(path, st);
        REQUIRE(q.positive_boundary.size() == q.ribs.size());
        REQUIRE(q.negative_boundary.size() == q.ribs.size());
        REQUIRE(q.edges.size() + 1 == q.ribs.size());
        for (const StepPlan& plan : q.interval_plans) CHECK(std::abs(plan.theta) <= st.quality);
        for (const Rib& r : q.ribs) {
            CHECK(std::abs(distance(r.P, r.g) - st.width / 2) <= 1e-12 * st.width);
            CHECK(std::abs(distance(r.N, r.g) - st.width / 2) <= 1e-12 * st.width);
            CHECK(r.P == q.positive_boundary[&r - q.ribs.data()]);
        }
        for (std::size_t e = 0; e < q.edges.size(); ++e) {
            if (q.edges[e].kind != EdgeKind::Interval) continue;
            const Rib& a = q.ribs[e];
            const Rib& b = q.ribs[e + 1];
            const TangentInterval& iv = q.intervals[q.edges[e].owner];
            const double step = unwrapped_tangent_angle(path[a.segment_index], iv, b.t) -
                                unwrapped_tangent_angle(path[a.segment_index], iv, a.t);
            CHECK(std::abs(step - q.interval_plans[q.edges[e].owner].theta) < 1e-9);
        }
    }
}

TEST_CASE("halving quality tightens the envelope") {
    Corpus corpus(404);
    for (int i = 0; i < 100; ++i) {
        const Path path({corpus.mixed(static_cast<std::size_t>(i))});
        StrokeStyle st = corpus.style();
        const Quadrangulation coarse = tessellate_path(path, st);
        StrokeStyle fine_style = st;
        fine_style.quality = st.quality / 2;
        const Quadrangulation fine = tessellate_path(path, fine_style);
        REQUIRE(coarse.interval_plans.size() == fine.interval_plans.size());
        for (std::size_t k = 0; k < coarse.interval_plans.size(); ++k) {
            const StepPlan& c = coarse.interval_plans[k];
            const StepPlan& f = fine.interval_plans[k];
            CHECK(std::abs(f.theta) <= std::abs(c.theta));
            CHECK(2 * std::abs(f.theta) <= st.quality);
            // ceil(2x) >= 2 ceil(x) - 1
            if (c.steps > 0 && c.theta != 0)
                CHECK(std::abs(f.theta / c.theta) <= c.steps / (2.0 * c.steps - 1.0) + 1e-12);
        }
        const AuditReport fine_audit = audit(path, fine_style);
        for (const FacetRecord& f : fine_audit.facets)
            if (f.classification == FacetClass::Ordinary) CHECK(f.angle <= st.quality + kBoundTolerance);
    }
}

TEST_CASE("invalid style is rejected before work") {
    CHECK(code_of([] { tessellate_path(Path({testing::quarter_circle()}), style(0, 4)); }) ==
          ErrorCode::InvalidStyle);
}

}
