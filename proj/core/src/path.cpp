#include <polarstroke/path.hpp>

#include <polarstroke/error.hpp>

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

namespace polarstroke {

std::string_view to_string(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::Line: return "line";
    case SegmentKind::Quadratic: return "quad";
    case SegmentKind::RationalQuadratic: return "rquad";
    case SegmentKind::Cubic: return "cubic";
    }
    return "unknown";
}

int worst_case_offset_cusps(SegmentKind kind) {
    switch (kind) {
    case SegmentKind::Line: return 0;
    case SegmentKind::Quadratic: return 2;
    case SegmentKind::RationalQuadratic: return 4;
    case SegmentKind::Cubic: return 4;
    }
    return 0;
}

PathSegment::PathSegment(SegmentKind kind, std::span<const Point2> pts, double weight)
    : kind_(kind), count_(pts.size()), weight_(weight) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (!is_finite(pts[i])) {
            throw Error(ErrorCode::InvalidSegment, "control point " + std::to_string(i) + " is not finite");
        }
        points_[i] = pts[i];
    }
    if (!std::isfinite(weight) || weight <= 0.0) {
        throw Error(ErrorCode::NonPositiveWeight, "rational weight must be finite and positive");
    }
}

PathSegment PathSegment::line(Point2 p0, Point2 p1) {
    const std::array pts{p0, p1};
    return {SegmentKind::Line, pts, 1.0};
}

PathSegment PathSegment::quadratic(Point2 p0, Point2 p1, Point2 p2) {
    const std::array pts{p0, p1, p2};
    return {SegmentKind::Quadratic, pts, 1.0};
}

PathSegment PathSegment::rational_quadratic(Point2 p0, Point2 p1, Point2 p2, double weight) {
    const std::array pts{p0, p1, p2};
    return {SegmentKind::RationalQuadratic, pts, weight};
}

PathSegment PathSegment::cubic(Point2 p0, Point2 p1, Point2 p2, Point2 p3) {
    const std::array pts{p0, p1, p2, p3};
    return {SegmentKind::Cubic, pts, 1.0};
}

double PathSegment::extent() const noexcept {
    auto pts = points();
    auto [xmin, xmax] = std::minmax_element(pts.begin(), pts.end(),
                                            [](Point2 a, Point2 b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(pts.begin(), pts.end(),
                                            [](Point2 a, Point2 b) { return a.y < b.y; });
    return std::hypot(xmax->x - xmin->x, ymax->y - ymin->y);
}

Path::Path(std::vector<PathSegment> segments) : segments_(std::move(segments)) {
    if (segments_.empty()) {
        throw Error(ErrorCode::EmptyPath, "path has no segments");
    }
    for (std::size_t i = 1; i < segments_.size(); ++i) {
        const double gap = distance(segments_[i - 1].end(), segments_[i].start());
        if (!(gap <= kContiguityTolerance)) {
            throw Error(ErrorCode::ContiguityError,
                        "segment " + std::to_string(i) + " starts " + std::to_string(gap) +
                            " units away from the end of segment " + std::to_string(i - 1));
        }
    }
}

std::uint64_t Path::fingerprint() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::uint64_t v) {
        for (int i = 0; i < 8; ++i) {
            h ^= (v >> (8 * i)) & 0xffU;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& seg : segments_) {
        mix(static_cast<std::uint64_t>(seg.kind()));
        for (Point2 p : seg.points()) {
            mix(std::bit_cast<std::uint64_t>(p.x));
            mix(std::bit_cast<std::uint64_t>(p.y));
        }
        mix(std::bit_cast<std::uint64_t>(seg.weight()));
    }
    return h;
}

Path parse_path(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '[') {
        return parse_json_path(text);
    }
    return parse_svg_path(text);
}

} // namespace polarstroke
