#pragma once

#include <cmath>

namespace polarstroke {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Point2& operator+=(Point2 o) { x += o.x; y += o.y; return *this; }
    constexpr Point2& operator-=(Point2 o) { x -= o.x; y -= o.y; return *this; }
    constexpr Point2& operator*=(double s) { x *= s; y *= s; return *this; }

    friend constexpr Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
    friend constexpr Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
    friend constexpr Point2 operator*(double s, Point2 a) { return {a.x * s, a.y * s}; }
    friend constexpr Point2 operator/(Point2 a, double s) { return {a.x / s, a.y / s}; }
    friend constexpr bool operator==(Point2, Point2) = default;
};

constexpr double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(b - a); }
inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Clockwise quarter turn. Normals in this library are the tangent turned this way.
constexpr Point2 rotate_cw(Point2 a) { return {a.y, -a.x}; }
constexpr Point2 rotate_ccw(Point2 a) { return {-a.y, a.x}; }

inline Point2 rotate(Point2 a, double angle) {
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    return {c * a.x - s * a.y, s * a.x + c * a.y};
}

inline Point2 direction(double angle) { return {std::cos(angle), std::sin(angle)}; }

} // namespace polarstroke
