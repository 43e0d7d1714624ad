#include <polarstroke/diffgeo.hpp>
#include <polarstroke/intervals.hpp>

#include "corpus.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace polarstroke;
using polarstroke::testing::Corpus;

namespace {

constexpr double kPi = std::numbers::pi;

void check_split(const PathSegment& seg) {
    const SegmentSplit split = split_segment(seg, 0);
    REQUIRE(!split.intervals.empty());
    CHECK(split.intervals.front().t_lo == 0.0);
    CHECK(split.intervals.back().t_hi == 1.0);
    for (std::size_t k = 0; k < split.intervals.size(); ++k) {
        const TangentInterval& iv = split.intervals[k];
        CHECK(iv.t_lo < iv.t_hi);
        if (k > 0) CHECK(iv.t_lo == split.intervals[k - 1].t_hi);
        CHECK(std::abs(iv.rotation) < kMaxIntervalRotation);
        CHECK(interval_rotation(iv) == doctest::Approx(iv.rotation).epsilon(1e-12));
        CHECK((iv.winding == Winding::Straight) == (iv.rotation == 0.0));

        const int sense = winding_sign(iv);
        double prev = unwrapped_tangent_angle(seg, iv, iv.t_lo);
        CHECK(std::abs(prev - iv.psi_lo) < 1e-9);
        bool kappa_pos = false, kappa_neg = false;
        for (int i = 1; i <= 128; ++i) {
            const double t = iv.t_lo + (iv.t_hi - iv.t_lo) * i / 128.0;
            const double psi = unwrapped_tangent_angle(seg, iv, t);
            if (sense != 0) CHECK(sense * (psi - prev) >= -1e-12);
            prev = psi;
            if (i < 128) {
                const double k = curvature(seg, t);
                if (k > 1e-9) kappa_pos = true;
                if (k < -1e-9) kappa_neg = true;
            }
        }
        CHECK(std::abs(prev - iv.psi_hi) < 1e-9);
        CHECK_FALSE((kappa_pos && kappa_neg));
        if (sense > 0) CHECK_FALSE(kappa_neg);
        if (sense < 0) CHECK_FALSE(kappa_pos);
    }
    for (const GeneratorCusp& c : split.cusps) {
        CHECK(norm(derivative(seg, c.t, 1)) <= derivative_tolerance(seg));
        CHECK(std::abs(std::abs(c.psi_out - c.psi_in) - kPi) < 1e-6);
        bool at_boundary = false;
        for (const auto& iv : split.intervals) at_boundary = at_boundary || iv.t_hi == c.t;
        CHECK(at_boundary);
    }
}

} // namespace

TEST_SUITE("intervals") {

TEST_CASE("line") {
    const SegmentSplit s = split_segment(PathSegment::line({0, 0}, {4, 3}));
    REQUIRE(s.intervals.size() == 1);
    CHECK(s.intervals[0].rotation == 0.0);
    CHECK(interval_rotation(s.intervals[0]) == 0.0);
    CHECK(s.intervals[0].winding == Winding::Straight);
    CHECK(s.cusps.empty());
}

TEST_CASE("quarter circle") {
    const PathSegment seg = testing::quarter_circle();
    const SegmentSplit s = split_segment(seg);
    REQUIRE(s.intervals.size() == 1);
    const TangentInterval& iv = s.intervals[0];
    CHECK(std::abs(interval_rotation(iv) - kPi / 2) < 1e-9);
    CHECK(iv.winding == Winding::CounterClockwise);
    CHECK(s.cusps.empty());

    TangentInterval half = iv;
    half.t_hi = 0.5;
    half.psi_hi = unwrapped_tangent_angle(seg, iv, 0.5);
    half.rotation = half.psi_hi - half.psi_lo;
    CHECK(std::abs(interval_rotation(half) - kPi / 4) < 1e-9);
}

TEST_CASE("cusp cubic") {
    const PathSegment seg = testing::cusp_cubic();
    const SegmentSplit s = split_segment(seg, 3);
    REQUIRE(s.cusps.size() == 1);
    const GeneratorCusp& c = s.cusps[0];
    CHECK(c.segment_index == 3);
    CHECK(std::abs(c.t - 0.5) < 1e-9);
    CHECK(distance(c.position, {1, 1.5}) < 1e-9);
    CHECK(std::abs(std::abs(c.psi_out - c.psi_in) - kPi) < 1e-6);
    REQUIRE(s.intervals.size() == 2);
    CHECK(s.intervals[0].t_hi == c.t);
    CHECK(s.intervals[1].t_lo == c.t);
    check_split(seg);
}

TEST_CASE("serpentine splits at both inflections") {
    const PathSegment seg = PathSegment::cubic({0, 0}, {40, 60}, {60, -60}, {100, 0});
    const SegmentSplit s = split_segment(seg);
    REQUIRE(s.intervals.size() == 2);
    CHECK(s.intervals[0].winding != s.intervals[1].winding);
    CHECK(std::abs(curvature(seg, s.intervals[0].t_hi)) < 1e-9);

    const PathSegment two = PathSegment::cubic({0, 0}, {30, 60}, {70, -60}, {60, 30});
    check_split(two);
}

TEST_CASE("loop is bisected below pi") {
    const PathSegment loop = PathSegment::cubic({0, 0}, {30, 30}, {-30, 30}, {0, 0});
    const SegmentSplit s = split_segment(loop);
    double total = 0;
    for (const auto& iv : s.intervals) total += iv.rotation;
    CHECK(std::abs(total) > kPi);
    CHECK(s.intervals.size() >= 2);
    check_split(loop);
}

TEST_CASE("random corpus properties") {
    Corpus corpus(2024);
    for (int i = 0; i < 400; ++i) check_split(corpus.of_kind(static_cast<SegmentKind>(i % 4)));
}

TEST_CASE("parameter at angle") {
    Corpus corpus(5);
    for (int i = 0; i < 100; ++i) {
        const PathSegment seg = corpus.mixed(static_cast<std::size_t>(i));
        for (const auto& iv : split_segment(seg).intervals) {
            if (iv.winding == Winding::Straight) continue;
            const double target = iv.psi_lo + corpus.uniform(0.0, 1.0) * iv.rotation;
            const double t = parameter_at_angle(seg, iv, target);
            CHECK(t >= iv.t_lo);
            CHECK(t <= iv.t_hi);
            CHECK(std::abs(unwrapped_tangent_angle(seg, iv, t) - target) < 1e-10);
            CHECK(parameter_at_angle(seg, iv, iv.psi_lo) == iv.t_lo);
            CHECK(parameter_at_angle(seg, iv, iv.psi_hi) == iv.t_hi);
        }
    }
}

}
