#include <polarstroke/auditor.hpp>

#include <polarstroke/error.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace polarstroke {

namespace {

Point2 intersect_lines(Point2 p, Point2 d, Point2 q, Point2 e) {
    const double den = cross(d, e);
    if (!(std::abs(den) > 1e-15 * norm(d) * norm(e))) {
        throw Error(ErrorCode::ParallelLines, "lines are parallel");
    }
    const double a = cross(q - p, e) / den;
    return p + d * a;
}

const char* branch_name(Branch b) { return b == Branch::Positive ? "positive" : "negative"; }

} // namespace

std::string_view to_string(FacetClass c) {
    switch (c) {
    case FacetClass::Ordinary: return "ordinary";
    case FacetClass::CuspFan: return "cusp_fan";
    case FacetClass::Extraordinary: return "extraordinary";
    }
    return "unknown";
}

double facet_angle(Point2 a, Point2 b, Point2 c) {
    const Point2 u = b - a;
    const Point2 v = c - b;
    if (!(norm(u) > kMinEdgeLength) || !(norm(v) > kMinEdgeLength)) {
        throw Error(ErrorCode::ZeroLengthEdge, "facet edge has zero length");
    }
    return std::atan2(std::abs(cross(u, v)), dot(u, v));
}

std::vector<FacetRecord> classify_facets(const Quadrangulation& quad, const CuspReport& cusps,
                                         std::vector<std::string>* warnings) {
    if (quad.path_fingerprint != cusps.path_fingerprint || quad.style.width != cusps.width) {
        throw Error(ErrorCode::MismatchedInputs, "tessellation and cusp report come from different inputs");
    }
    auto warn = [warnings](std::string msg) {
        if (warnings) warnings->push_back(std::move(msg));
    };

    std::vector<FacetRecord> out;
    const std::size_t n = quad.ribs.size();
    if (n < 3) {
        return out;
    }
    for (Branch branch : kBranches) {
        const auto& pts = quad.boundary(branch);
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const EdgeInfo& before = quad.edges[j - 1];
            const EdgeInfo& after = quad.edges[j];
            if (before.kind == EdgeKind::Corner || after.kind == EdgeKind::Corner) {
                warn(std::string(branch_name(branch)) + " vertex " + std::to_string(j) +
                     " touches a segment corner; skipped");
                continue;
            }
            const Point2 a = pts[j - 1];
            const Point2 b = pts[j];
            const Point2 c = pts[j + 1];
            if (!(distance(a, b) > kMinEdgeLength) || !(distance(b, c) > kMinEdgeLength)) {
                warn(std::string(branch_name(branch)) + " vertex " + std::to_string(j) +
                     " has a zero-length edge; skipped");
                continue;
            }

            FacetRecord rec;
            rec.branch = branch;
            rec.vertex_index = j;
            rec.angle = facet_angle(a, b, c);
            rec.theta_local = std::max(std::abs(before.theta), std::abs(after.theta));
            rec.junction = before.kind != after.kind || before.owner != after.owner;

            if (before.kind == EdgeKind::CuspFan && after.kind == EdgeKind::CuspFan && before.owner == after.owner) {
                rec.classification = FacetClass::CuspFan;
            } else {
                const double u0 = std::min(quad.ribs[j - 1].path_parameter(), quad.ribs[j + 1].path_parameter());
                const double u1 = std::max(quad.ribs[j - 1].path_parameter(), quad.ribs[j + 1].path_parameter());
                for (const OffsetCusp& oc : cusps.cusps) {
                    const double u = oc.path_parameter();
                    if (oc.branch == branch && u >= u0 && u <= u1) {
                        rec.straddled_cusps.push_back(oc);
                    }
                }
                rec.classification =
                    rec.straddled_cusps.empty() ? FacetClass::Ordinary : FacetClass::Extraordinary;
            }
            out.push_back(std::move(rec));
        }
    }
    return out;
}

AuditReport audit(const Path& path, const StrokeStyle& style) {
    style.validate();
    AuditReport report;
    const Quadrangulation quad = tessellate_path(path, style);
    report.rib_count = quad.ribs.size();
    report.cusp_report = build_cusp_report(path, style.width);
    report.cusp_count_violations = audit_cusp_counts(report.cusp_report);
    report.warnings = report.cusp_report.warnings;
    report.facets = classify_facets(quad, report.cusp_report, &report.warnings);
    for (const FacetRecord& f : report.facets) {
        if (f.classification == FacetClass::Extraordinary) {
            ++report.extraordinary_count;
        }
        if (f.classification != FacetClass::Ordinary) {
            continue;
        }
        if (f.angle > 2.0 * f.theta_local + kBoundTolerance) {
            report.violations.push_back(f);
        }
        if (f.theta_local > 0.0) {
            report.max_ordinary_ratio = std::max(report.max_ordinary_ratio, f.angle / (2.0 * f.theta_local));
        }
    }
    return report;
}

int convex_orientation(Point2 a, Point2 b, Point2 c, Point2 d) {
    const std::array<Point2, 4> v{a, b, c, d};
    double scale = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        scale = std::max(scale, distance(v[i], v[(i + 1) % 4]));
    }
    const double tol = 1e-14 * scale * scale;
    int sign = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        const double turn = cross(v[(i + 1) % 4] - v[i], v[(i + 2) % 4] - v[(i + 1) % 4]);
        if (!(std::abs(turn) > tol)) {
            return 0;
        }
        const int s = turn > 0.0 ? 1 : -1;
        if (sign != 0 && s != sign) {
            return 0;
        }
        sign = s;
    }
    // Four same-sign turns, each below pi, sum to exactly one winding.
    return sign;
}

ConfigurationCheck check_ordinary_configuration(const Rib& prev, const Rib& mid, const Rib& next, Branch branch) {
    const Point2 xp = prev.boundary(branch);
    const Point2 xm = mid.boundary(branch);
    const Point2 xn = next.boundary(branch);
    ConfigurationCheck check;
    ProofPoints& pp = check.points;
    pp.I0 = intersect_lines(prev.g, prev.unit_normal, mid.g, mid.unit_normal);
    pp.I1 = intersect_lines(mid.g, mid.unit_normal, next.g, next.unit_normal);
    pp.T0 = intersect_lines(xp, rotate_ccw(prev.unit_normal), xm, rotate_ccw(mid.unit_normal));
    pp.T1 = intersect_lines(xm, rotate_ccw(mid.unit_normal), xn, rotate_ccw(next.unit_normal));
    check.leading_orientation = convex_orientation(pp.I0, xm, pp.T0, xp);
    check.trailing_orientation = convex_orientation(pp.I1, xn, pp.T1, xm);
    return check;
}

} // namespace polarstroke
