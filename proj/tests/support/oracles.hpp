#pragma once

// Independent reference computations. Everything here works from power-basis
// coefficients or explicit Bernstein sums, never from the library's
// de Casteljau / homogeneous-projection routines.

#include <polarstroke/path.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace polarstroke::testing {

/// X(t) = sum a_k t^k (2D), W(t) = sum b_k t^k; the curve is X / W.
struct PowerBasis {
    std::array<Point2, 4> x{};
    std::array<double, 4> w{};

    static PowerBasis from(const PathSegment& seg) {
        PowerBasis pb;
        auto p = seg.points();
        switch (seg.kind()) {
        case SegmentKind::Line:
            pb.x[0] = p[0];
            pb.x[1] = p[1] - p[0];
            pb.w[0] = 1.0;
            break;
        case SegmentKind::Quadratic:
            pb.x[0] = p[0];
            pb.x[1] = (p[1] - p[0]) * 2.0;
            pb.x[2] = p[0] - p[1] * 2.0 + p[2];
            pb.w[0] = 1.0;
            break;
        case SegmentKind::RationalQuadratic: {
            const double m = seg.weight();
            const Point2 q1 = p[1] * m;
            pb.x[0] = p[0];
            pb.x[1] = (q1 - p[0]) * 2.0;
            pb.x[2] = p[0] - q1 * 2.0 + p[2];
            pb.w[0] = 1.0;
            pb.w[1] = 2.0 * (m - 1.0);
            pb.w[2] = 2.0 - 2.0 * m;
            break;
        }
        case SegmentKind::Cubic:
            pb.x[0] = p[0];
            pb.x[1] = (p[1] - p[0]) * 3.0;
            pb.x[2] = (p[0] - p[1] * 2.0 + p[2]) * 3.0;
            pb.x[3] = p[3] - p[0] + (p[1] - p[2]) * 3.0;
            pb.w[0] = 1.0;
            break;
        }
        return pb;
    }

    Point2 point(double t) const {
        const Point2 X = ((x[3] * t + x[2]) * t + x[1]) * t + x[0];
        const double W = ((w[3] * t + w[2]) * t + w[1]) * t + w[0];
        return X / W;
    }

    /// Writes D = X'W - XW' and D' = X''W - XW'', which give
    /// g' = D / W^2 and kappa = W^2 (D x D') / |D|^3.
    void hodograph(double t, Point2& d, Point2& dd, double& W) const {
        const Point2 X = ((x[3] * t + x[2]) * t + x[1]) * t + x[0];
        const Point2 X1 = (x[3] * (3.0 * t) + x[2] * 2.0) * t + x[1];
        const Point2 X2 = x[3] * (6.0 * t) + x[2] * 2.0;
        W = ((w[3] * t + w[2]) * t + w[1]) * t + w[0];
        const double W1 = (3.0 * w[3] * t + 2.0 * w[2]) * t + w[1];
        const double W2 = 6.0 * w[3] * t + 2.0 * w[2];
        d = X1 * W - X * W1;
        dd = X2 * W - X * W2;
    }

    double curvature(double t) const {
        Point2 d, dd;
        double W;
        hodograph(t, d, dd, W);
        const double q = dot(d, d);
        return W * W * cross(d, dd) / (q * std::sqrt(q));
    }

    Point2 velocity(double t) const {
        Point2 d, dd;
        double W;
        hodograph(t, d, dd, W);
        return d / (W * W);
    }
};

/// Curvature of the circle through three points, signed counterclockwise positive.
inline double circumcircle_curvature(Point2 a, Point2 b, Point2 c) {
    const double ab = distance(a, b);
    const double bc = distance(b, c);
    const double ca = distance(c, a);
    return 2.0 * cross(b - a, c - a) / (ab * bc * ca);
}

struct BranchCounts {
    int positive = 0;
    int negative = 0;
    int total() const { return positive + negative; }
};

/// Sign changes of h_s = 1 + s * kappa * w / 2 on both branches over
/// `intervals` uniform steps, using sign(|D|^3 + s * W^2 (D x D') * w / 2)
/// so no division is needed.
inline BranchCounts sign_scan_cusps(const PathSegment& seg, double width, std::size_t intervals = 100000) {
    const PowerBasis pb = PowerBasis::from(seg);
    BranchCounts counts;
    int last_pos = 0;
    int last_neg = 0;
    auto step = [](double v, int& last, int& changes) {
        const int s = (v > 0.0) - (v < 0.0);
        if (s == 0) return;
        if (last != 0 && s != last) ++changes;
        last = s;
    };
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(intervals);
        Point2 d, dd;
        double W;
        pb.hodograph(t, d, dd, W);
        const double q = dot(d, d);
        const double speed3 = q * std::sqrt(q);
        const double bend = W * W * cross(d, dd) * 0.5 * width;
        step(speed3 + bend, last_pos, counts.positive);
        step(speed3 - bend, last_neg, counts.negative);
    }
    return counts;
}

/// Brute-force maximum of -s * kappa over `intervals` uniform steps.
inline double brute_max_neg_curvature(const PathSegment& seg, int branch_sign, std::size_t intervals = 100000) {
    const PowerBasis pb = PowerBasis::from(seg);
    double best = -INFINITY;
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(intervals);
        best = std::max(best, -branch_sign * pb.curvature(t));
    }
    return best;
}

/// brute_max_neg_curvature followed by two rounds of dense resampling around
/// the best sample, for curvature peaks narrower than the coarse spacing.
inline double zoomed_max_neg_curvature(const PathSegment& seg, int branch_sign, std::size_t intervals = 100000) {
    const PowerBasis pb = PowerBasis::from(seg);
    double lo = 0.0, hi = 1.0;
    double best = -INFINITY;
    for (int round = 0; round < 3; ++round) {
        const double step = (hi - lo) / static_cast<double>(intervals);
        double best_t = lo;
        for (std::size_t i = 0; i <= intervals; ++i) {
            const double t = lo + step * static_cast<double>(i);
            const double v = -branch_sign * pb.curvature(t);
            if (v > best) {
                best = v;
                best_t = t;
            }
        }
        lo = std::max(0.0, best_t - 2 * step);
        hi = std::min(1.0, best_t + 2 * step);
    }
    return best;
}

} // namespace polarstroke::testing
