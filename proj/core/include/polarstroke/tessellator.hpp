#pragma once

#include <polarstroke/diffgeo.hpp>
#include <polarstroke/intervals.hpp>
#include <polarstroke/path.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polarstroke {

/// Stroke width and tangent-angle step threshold (radians, 0 < q < pi/2).
struct StrokeStyle {
    double width = 1.0;
    double quality = 0.06981317007977318; // 4 degrees

    /// Throws InvalidStyle.
    void validate() const;
};

struct StepPlan {
    double rotation = 0.0;
    int steps = 1;
    /// rotation / steps, carrying the sign of rotation.
    double theta = 0.0;
};

enum class RibOrigin { Interval, CuspFan };

struct Rib {
    std::size_t segment_index = 0;
    double t = 0.0;
    RibOrigin origin = RibOrigin::Interval;
    /// Interval index or fan index, depending on origin.
    std::size_t owner = 0;
    /// Step index j inside the interval or fan.
    int step = 0;
    Point2 g;
    Point2 unit_normal;
    Point2 P;
    Point2 N;
    double psi = 0.0;

    /// Path-global parameter: segment index plus t.
    double path_parameter() const { return static_cast<double>(segment_index) + t; }
    Point2 boundary(Branch b) const { return b == Branch::Positive ? P : N; }
};

enum class EdgeKind {
    Interval,
    CuspFan,
    /// Two ribs at the same generator point with different normals (a segment corner).
    Corner,
};

/// The quad between ribs i and i+1.
struct EdgeInfo {
    EdgeKind kind = EdgeKind::Interval;
    std::size_t owner = 0;
    double theta = 0.0;
};

struct CuspFan {
    GeneratorCusp cusp;
    StepPlan plan;
};

struct Quadrangulation {
    std::vector<Rib> ribs;
    std::vector<EdgeInfo> edges;
    std::vector<TangentInterval> intervals;
    std::vector<StepPlan> interval_plans;
    std::vector<CuspFan> fans;
    std::vector<Point2> positive_boundary;
    std::vector<Point2> negative_boundary;
    std::uint64_t path_fingerprint = 0;
    StrokeStyle style;

    const std::vector<Point2>& boundary(Branch b) const {
        return b == Branch::Positive ? positive_boundary : negative_boundary;
    }
};

/// Smallest step count with |rotation| / steps <= quality.
StepPlan plan_steps(double rotation, double quality);

/// t in [t_lo, t_hi] with |psi(t) - target| < 1e-10. Throws TargetOutOfInterval.
double solve_angle_parameter(const PathSegment& seg, const TangentInterval& interval, double target_psi);

std::vector<Rib> tessellate_interval(const PathSegment& seg, const TangentInterval& interval,
                                     const StrokeStyle& style);

/// Ribs all through the cusp point, turning by pi in uniform steps from the
/// incoming normal to the outgoing one.
std::vector<Rib> tessellate_generator_cusp(const GeneratorCusp& cusp, const StrokeStyle& style);

StepPlan fan_plan(const GeneratorCusp& cusp, double quality);

Quadrangulation tessellate_path(const Path& path, const StrokeStyle& style);

} // namespace polarstroke
