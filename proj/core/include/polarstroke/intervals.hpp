#pragma once

#include <polarstroke/diffgeo.hpp>
#include <polarstroke/path.hpp>

#include <cstddef>
#include <vector>

namespace polarstroke {

enum class Winding { Clockwise, CounterClockwise, Straight };

/// A parameter range on which the tangent angle is monotone and turns by less than pi.
struct TangentInterval {
    std::size_t segment_index = 0;
    double t_lo = 0.0;
    double t_hi = 1.0;
    /// Unwrapped tangent angles at the ends; psi_hi = psi_lo + rotation.
    double psi_lo = 0.0;
    double psi_hi = 0.0;
    double rotation = 0.0;
    Winding winding = Winding::Straight;
};

/// Interior point where the hodograph vanishes and the tangent reverses.
struct GeneratorCusp {
    std::size_t segment_index = 0;
    double t = 0.0;
    Point2 position;
    double psi_in = 0.0;
    /// psi_in + pi or psi_in - pi; the sign follows the limiting curvature.
    double psi_out = 0.0;
};

struct SegmentSplit {
    std::vector<TangentInterval> intervals;
    std::vector<GeneratorCusp> cusps;
};

inline constexpr std::size_t kRootScanSamples = 256;
inline constexpr double kMaxIntervalRotation = 3.141592653589793 - 1e-6;
inline constexpr double kStraightRotation = 1e-9;

/// Splits at inflections, generator cusps, and angle midpoints until every
/// interval turns by less than kMaxIntervalRotation.
SegmentSplit split_segment(const PathSegment& seg, std::size_t segment_index = 0);

double interval_rotation(const TangentInterval& interval);

/// +1, -1, or 0 for straight intervals.
int winding_sign(const TangentInterval& interval);

/// Frame inside an interval; at the ends the one-sided limit from inside is used.
Frame interval_frame(const PathSegment& seg, const TangentInterval& interval, double t);

/// Tangent angle at t unwrapped into the interval's continuous branch.
double unwrapped_tangent_angle(const PathSegment& seg, const TangentInterval& interval, double t);

/// Bisection on the monotone unwrapped tangent angle. The target is clamped to the interval.
double parameter_at_angle(const PathSegment& seg, const TangentInterval& interval, double target_psi);

} // namespace polarstroke
