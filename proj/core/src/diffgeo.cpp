#include <polarstroke/diffgeo.hpp>

#include <polarstroke/error.hpp>

#include <array>
#include <cmath>
#include <limits>
#include <string>

namespace polarstroke {

namespace {

void check_parameter(double t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw Error(ErrorCode::ParameterOutOfRange, "parameter " + std::to_string(t) + " outside [0, 1]");
    }
}

template <typename T, std::size_t N>
T de_casteljau(std::array<T, N> pts, std::size_t count, double t) {
    const double u = 1.0 - t;
    for (std::size_t level = count - 1; level > 0; --level) {
        for (std::size_t i = 0; i < level; ++i) {
            pts[i] = pts[i] * u + pts[i + 1] * t;
        }
    }
    return pts[0];
}

/// Bernstein coefficients of the order-th derivative of a degree-n polynomial curve.
template <typename T, std::size_t N>
std::size_t hodograph(std::array<T, N>& pts, std::size_t count, int order) {
    for (int k = 0; k < order; ++k) {
        if (count <= 1) {
            pts[0] = pts[0] * 0.0;
            return 1;
        }
        const double n = static_cast<double>(count - 1);
        for (std::size_t i = 0; i + 1 < count; ++i) {
            pts[i] = (pts[i + 1] - pts[i]) * n;
        }
        --count;
    }
    return count;
}

Point2 polynomial_derivative(const PathSegment& seg, double t, int order) {
    std::array<Point2, 4> pts{};
    auto src = seg.points();
    for (std::size_t i = 0; i < src.size(); ++i) {
        pts[i] = src[i];
    }
    const std::size_t count = hodograph(pts, src.size(), order);
    return de_casteljau(pts, count, t);
}

struct Homogeneous {
    Point2 x[4];
    double w[4];
};

/// Derivatives of X(t) = sum w_i P_i B_i and W(t) = sum w_i B_i for the rational quadratic.
Homogeneous rational_terms(const PathSegment& seg, double t) {
    const double wm = seg.weight();
    const Point2 p0 = seg.point(0);
    const Point2 p1 = seg.point(1) * wm;
    const Point2 p2 = seg.point(2);
    Homogeneous h{};
    const double u = 1.0 - t;
    h.x[0] = p0 * (u * u) + p1 * (2 * u * t) + p2 * (t * t);
    h.w[0] = u * u + 2 * u * t * wm + t * t;
    h.x[1] = ((p1 - p0) * u + (p2 - p1) * t) * 2.0;
    h.w[1] = 2.0 * ((wm - 1.0) * u + (1.0 - wm) * t);
    h.x[2] = (p2 - p1 * 2.0 + p0) * 2.0;
    h.w[2] = 2.0 * (2.0 - 2.0 * wm);
    h.x[3] = {};
    h.w[3] = 0.0;
    return h;
}

Jet rational_jet(const PathSegment& seg, double t) {
    const Homogeneous h = rational_terms(seg, t);
    Jet j;
    j.position = h.x[0] / h.w[0];
    j.first = (h.x[1] - j.position * h.w[1]) / h.w[0];
    j.second = (h.x[2] - j.first * (2.0 * h.w[1]) - j.position * h.w[2]) / h.w[0];
    j.third = (h.x[3] - j.second * (3.0 * h.w[1]) - j.first * (3.0 * h.w[2]) - j.position * h.w[3]) / h.w[0];
    return j;
}

Jet polynomial_jet(const PathSegment& seg, double t) {
    Jet j;
    std::array<Point2, 4> pts{};
    auto src = seg.points();
    for (std::size_t i = 0; i < src.size(); ++i) {
        pts[i] = src[i];
    }
    std::size_t count = src.size();
    j.position = (t == 0.0) ? src.front() : (t == 1.0) ? src.back() : de_casteljau(pts, count, t);
    Point2* out[] = {&j.first, &j.second, &j.third};
    for (Point2* o : out) {
        count = hodograph(pts, count, 1);
        *o = de_casteljau(pts, count, t);
    }
    return j;
}

/// Curvature at a point where g' vanishes: g'(t+h) ~ h g'' + h^2/2 g''', so the
/// cross product of g' and g'' behaves like h^2/2 (g'' x g''') and |g'|^3 like |h|^3.
double singular_curvature(const Jet& j) {
    const double c = cross(j.second, j.third);
    const double scale = norm(j.second) * norm(j.third);
    if (!(std::abs(c) > 1e-12 * scale)) {
        return 0.0;
    }
    return std::copysign(std::numeric_limits<double>::infinity(), c);
}

} // namespace

Point2 evaluate(const PathSegment& seg, double t) {
    check_parameter(t);
    if (t == 0.0) return seg.start();
    if (t == 1.0) return seg.end();
    if (seg.kind() == SegmentKind::RationalQuadratic) {
        const Homogeneous h = rational_terms(seg, t);
        return h.x[0] / h.w[0];
    }
    std::array<Point2, 4> pts{};
    auto src = seg.points();
    for (std::size_t i = 0; i < src.size(); ++i) {
        pts[i] = src[i];
    }
    return de_casteljau(pts, src.size(), t);
}

Point2 derivative(const PathSegment& seg, double t, int order) {
    check_parameter(t);
    if (order < 1 || order > 3) {
        throw Error(ErrorCode::ParameterOutOfRange, "derivative order must be 1, 2 or 3");
    }
    if (seg.kind() == SegmentKind::RationalQuadratic) {
        const Jet j = rational_jet(seg, t);
        return order == 1 ? j.first : order == 2 ? j.second : j.third;
    }
    return polynomial_derivative(seg, t, order);
}

Jet jet(const PathSegment& seg, double t) {
    check_parameter(t);
    if (seg.kind() == SegmentKind::RationalQuadratic) {
        Jet j = rational_jet(seg, t);
        if (t == 0.0) j.position = seg.start();
        if (t == 1.0) j.position = seg.end();
        return j;
    }
    return polynomial_jet(seg, t);
}

double derivative_tolerance(const PathSegment& seg) { return 1e-9 * seg.extent(); }

Frame frame(const PathSegment& seg, double t, Side side) {
    const Jet j = jet(seg, t);
    const double eps = derivative_tolerance(seg);
    if (t == 0.0) side = Side::Above;
    if (t == 1.0) side = Side::Below;

    Frame f;
    f.t = t;
    f.position = j.position;
    const double speed = norm(j.first);
    Point2 dir;
    if (speed > eps) {
        dir = j.first / speed;
        f.curvature = cross(j.first, j.second) / (speed * speed * speed);
    } else {
        f.singular = true;
        // The first non-vanishing derivative g^(k) fixes the limit direction:
        // g'(t+h) ~ h^(k-1) g^(k), so for even k it reverses across t.
        const double s2 = norm(j.second);
        const double s3 = norm(j.third);
        if (s2 > eps) {
            dir = (side == Side::Above ? j.second : -j.second) / s2;
            f.curvature = singular_curvature(j);
        } else if (s3 > eps) {
            dir = j.third / s3;
            f.curvature = 0.0;
        } else {
            throw Error(ErrorCode::DegenerateSegment, "all derivatives vanish at t=" + std::to_string(t));
        }
    }
    f.unit_tangent = dir;
    f.unit_normal = rotate_cw(dir);
    f.tangent_angle = std::atan2(dir.y, dir.x);
    return f;
}

Frame frame(const PathSegment& seg, double t) { return frame(seg, t, t == 1.0 ? Side::Below : Side::Above); }

double curvature(const PathSegment& seg, double t) {
    const Jet j = jet(seg, t);
    const double speed = norm(j.first);
    if (speed > derivative_tolerance(seg)) {
        return cross(j.first, j.second) / (speed * speed * speed);
    }
    if (norm(j.second) > derivative_tolerance(seg)) {
        return singular_curvature(j);
    }
    if (norm(j.third) > derivative_tolerance(seg)) {
        return 0.0;
    }
    throw Error(ErrorCode::DegenerateSegment, "all derivatives vanish at t=" + std::to_string(t));
}

Point2 offset_point(const Frame& frame, double width, Branch branch) {
    return frame.position + frame.unit_normal * (sign_of(branch) * 0.5 * width);
}

double offset_factor(double kappa, double width, Branch branch) {
    return 1.0 + sign_of(branch) * kappa * 0.5 * width;
}

double offset_curvature(double kappa, double width, Branch branch) {
    const double h = offset_factor(kappa, width, branch);
    if (!(std::abs(h) >= 1e-12)) {
        throw Error(ErrorCode::OffsetCuspSingularity, "offset curvature is unbounded (1 + s*kappa*w/2 = 0)");
    }
    return kappa / std::abs(h);
}

} // namespace polarstroke
