#pragma once

#include <polarstroke/path.hpp>
#include <polarstroke/point.hpp>

namespace polarstroke {

/// Offset branch. Positive offsets go along the unit normal, negative against it.
enum class Branch : int { Positive = 1, Negative = -1 };

constexpr double sign_of(Branch b) { return static_cast<double>(static_cast<int>(b)); }
constexpr Branch opposite(Branch b) { return b == Branch::Positive ? Branch::Negative : Branch::Positive; }
inline constexpr Branch kBranches[] = {Branch::Positive, Branch::Negative};

/// Position and derivatives up to third order at one parameter.
struct Jet {
    Point2 position;
    Point2 first;
    Point2 second;
    Point2 third;
};

/// Local frame of the generator curve.
///
/// The normal is the unit tangent turned clockwise, so positive curvature
/// (counterclockwise turning) puts the positive branch on the convex side
/// and the offset curvature takes the form kappa / |1 + kappa * w / 2|.
struct Frame {
    double t = 0.0;
    Point2 position;
    double tangent_angle = 0.0;
    Point2 unit_tangent{1.0, 0.0};
    Point2 unit_normal{0.0, -1.0};
    /// Signed, counterclockwise positive. +-inf at a generator cusp.
    double curvature = 0.0;
    /// The first derivative vanished and the tangent is a one-sided limit.
    bool singular = false;
};

/// Which one-sided limit to take where the first derivative vanishes.
enum class Side { Below, Above };

Point2 evaluate(const PathSegment& seg, double t);

/// order in 1..3. Rational quadratics are differentiated in homogeneous coordinates.
Point2 derivative(const PathSegment& seg, double t, int order);

Jet jet(const PathSegment& seg, double t);

/// Threshold below which a derivative counts as vanishing: 1e-9 of the segment extent.
double derivative_tolerance(const PathSegment& seg);

/// Tangent limit at t approached from the given side when g'(t) vanishes.
/// At t = 1 only the limit from below exists, at t = 0 only from above.
Frame frame(const PathSegment& seg, double t, Side side);

/// One-sided limit toward increasing t, except at t = 1.
Frame frame(const PathSegment& seg, double t);

/// Signed curvature; +-inf at a generator cusp (0 when the cusp is a straight backtrack).
double curvature(const PathSegment& seg, double t);

Point2 offset_point(const Frame& frame, double width, Branch branch);

/// h_s = 1 + s * kappa * w / 2. Offset cusps are its zeros.
double offset_factor(double kappa, double width, Branch branch);

/// kappa / |1 + s * kappa * w / 2|; throws OffsetCuspSingularity when the denominator vanishes.
double offset_curvature(double kappa, double width, Branch branch);

} // namespace polarstroke
