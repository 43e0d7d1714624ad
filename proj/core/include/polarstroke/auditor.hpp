#pragma once

#include <polarstroke/cusps.hpp>
#include <polarstroke/tessellator.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace polarstroke {

enum class FacetClass { Ordinary, CuspFan, Extraordinary };

std::string_view to_string(FacetClass c);

/// One interior vertex of a boundary polyline.
struct FacetRecord {
    Branch branch = Branch::Positive;
    /// Rib index of the vertex.
    std::size_t vertex_index = 0;
    /// Exterior turning angle in [0, pi].
    double angle = 0.0;
    /// Largest |theta| of the two quads sharing the vertex.
    double theta_local = 0.0;
    FacetClass classification = FacetClass::Ordinary;
    /// Offset cusps of this branch whose parameter lies in [t_{j-1}, t_{j+1}].
    std::vector<OffsetCusp> straddled_cusps;
    /// The two quads come from different intervals or fans.
    bool junction = false;
};

struct AuditReport {
    std::vector<FacetRecord> facets;
    /// Max of angle / (2 theta_local) over ordinary facets with theta_local > 0.
    double max_ordinary_ratio = 0.0;
    std::vector<FacetRecord> violations;
    CuspReport cusp_report;
    std::vector<CuspCountViolation> cusp_count_violations;
    std::size_t extraordinary_count = 0;
    std::size_t rib_count = 0;
    std::vector<std::string> warnings;
};

inline constexpr double kBoundTolerance = 1e-6;
inline constexpr double kMinEdgeLength = 1e-12;

/// Angle between B - A and C - B. Throws ZeroLengthEdge.
double facet_angle(Point2 a, Point2 b, Point2 c);

/// Classifies and measures every interior vertex of both boundaries. Vertices
/// touching a zero-length or corner edge are skipped; a note goes to warnings.
std::vector<FacetRecord> classify_facets(const Quadrangulation& quad, const CuspReport& cusps,
                                         std::vector<std::string>* warnings = nullptr);

AuditReport audit(const Path& path, const StrokeStyle& style);

/// Normal-line intersections I0, I1 and tangent-line intersections T0, T1 of
/// three consecutive ribs on one branch.
struct ProofPoints {
    Point2 I0;
    Point2 I1;
    Point2 T0;
    Point2 T1;
};

struct ConfigurationCheck {
    ProofPoints points;
    /// +1 / -1 for a convex, simple quad wound counterclockwise / clockwise; 0 otherwise.
    /// Leading quad: I0, X_mid, T0, X_prev. Trailing quad: I1, X_next, T1, X_mid.
    int leading_orientation = 0;
    int trailing_orientation = 0;

    bool leading_convex() const { return leading_orientation != 0; }
    bool trailing_convex() const { return trailing_orientation != 0; }
    bool convex() const { return leading_convex() && trailing_convex(); }
    /// Both convex and wound the same way. A straddled offset cusp can leave
    /// both quads convex but mirror one of them.
    bool consistent() const { return convex() && leading_orientation == trailing_orientation; }
};

/// Throws ParallelLines when adjacent normals are parallel.
ConfigurationCheck check_ordinary_configuration(const Rib& prev, const Rib& mid, const Rib& next, Branch branch);

/// +1 / -1 when a, b, c, d is a strictly convex simple quad (counterclockwise /
/// clockwise), 0 when it is concave, self-intersecting, or degenerate.
int convex_orientation(Point2 a, Point2 b, Point2 c, Point2 d);

} // namespace polarstroke
