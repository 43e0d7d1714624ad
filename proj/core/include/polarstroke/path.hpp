#pragma once

#include <polarstroke/point.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace polarstroke {

enum class SegmentKind { Line, Quadratic, RationalQuadratic, Cubic };

std::string_view to_string(SegmentKind kind);

/// Worst-case number of offset cusps (both branches together) for a segment kind.
int worst_case_offset_cusps(SegmentKind kind);

/// One Bezier generator curve. Rational quadratics carry the homogeneous
/// weight of the middle control point; the end weights are 1.
class PathSegment {
public:
    static PathSegment line(Point2 p0, Point2 p1);
    static PathSegment quadratic(Point2 p0, Point2 p1, Point2 p2);
    static PathSegment rational_quadratic(Point2 p0, Point2 p1, Point2 p2, double weight);
    static PathSegment cubic(Point2 p0, Point2 p1, Point2 p2, Point2 p3);

    SegmentKind kind() const noexcept { return kind_; }
    std::span<const Point2> points() const noexcept { return {points_.data(), count_}; }
    Point2 point(std::size_t i) const { return points_.at(i); }
    Point2 start() const noexcept { return points_[0]; }
    Point2 end() const noexcept { return points_[count_ - 1]; }
    std::size_t degree() const noexcept { return count_ - 1; }
    double weight() const noexcept { return weight_; }

    /// Diagonal of the control-point bounding box.
    double extent() const noexcept;

    friend bool operator==(const PathSegment&, const PathSegment&) = default;

private:
    PathSegment(SegmentKind kind, std::span<const Point2> pts, double weight);

    SegmentKind kind_ = SegmentKind::Line;
    std::array<Point2, 4> points_{};
    std::size_t count_ = 2;
    double weight_ = 1.0;
};

inline constexpr double kContiguityTolerance = 1e-9;

/// A single open or closed subpath of contiguous segments.
class Path {
public:
    explicit Path(std::vector<PathSegment> segments);

    const std::vector<PathSegment>& segments() const noexcept { return segments_; }
    std::size_t size() const noexcept { return segments_.size(); }
    const PathSegment& operator[](std::size_t i) const { return segments_.at(i); }

    /// 64-bit FNV-1a over the exact bit patterns of every segment.
    std::uint64_t fingerprint() const noexcept;

    friend bool operator==(const Path&, const Path&) = default;

private:
    std::vector<PathSegment> segments_;
};

/// SVG path-data subset: M/m, L/l, Q/q, C/c, Z/z, one subpath.
Path parse_svg_path(std::string_view d);

/// JSON segment list: [{"kind":"line"|"quad"|"rquad"|"cubic","points":[[x,y],...],"weight":w}, ...]
Path parse_json_path(std::string_view text);

std::string to_json(const Path& path);

/// Dispatches on the first non-blank character: '[' selects JSON, anything else SVG.
Path parse_path(std::string_view text);

} // namespace polarstroke
