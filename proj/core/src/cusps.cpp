#include <polarstroke/cusps.hpp>

#include <polarstroke/error.hpp>
#include <polarstroke/intervals.hpp>
#include <polarstroke/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace polarstroke {

namespace {

constexpr double kEndSnap = 1e-9;
constexpr std::size_t kThresholdSamples = 1024;

void require_nondegenerate(const PathSegment& seg) {
    if (!(seg.extent() > 0.0)) {
        throw Error(ErrorCode::DegenerateSegment, "segment collapses to a point");
    }
}

} // namespace

std::vector<OffsetCusp> find_offset_cusps(const PathSegment& seg, double width, std::size_t segment_index) {
    require_nondegenerate(seg);
    if (!(width > 0.0)) {
        throw Error(ErrorCode::InvalidStyle, "stroke width must be positive");
    }
    std::vector<OffsetCusp> out;
    if (seg.kind() == SegmentKind::Line) {
        return out;
    }
    for (Branch branch : kBranches) {
        auto h = [&](double t) { return offset_factor(curvature(seg, t), width, branch); };
        const auto samples = roots::sample_uniform(h, 0.0, 1.0, kRootScanSamples);
        for (const auto& r : roots::isolate(h, samples, kCuspResidual)) {
            double t = r.t;
            if (t < kEndSnap) t = 0.0;
            if (t > 1.0 - kEndSnap) t = 1.0;
            if (!out.empty() && out.back().branch == branch && out.back().t == t) {
                continue;
            }
            OffsetCusp c;
            c.segment_index = segment_index;
            c.t = t;
            c.branch = branch;
            c.kappa_g = curvature(seg, t);
            c.position = offset_point(frame(seg, t), width, branch);
            c.touching = r.touching;
            out.push_back(c);
        }
    }
    std::sort(out.begin(), out.end(), [](const OffsetCusp& a, const OffsetCusp& b) {
        return a.t != b.t ? a.t < b.t : static_cast<int>(a.branch) > static_cast<int>(b.branch);
    });
    return out;
}

std::optional<double> cusp_threshold_width(const PathSegment& seg, Branch branch) {
    require_nondegenerate(seg);
    if (seg.kind() == SegmentKind::Line) {
        return std::nullopt;
    }
    const double s = sign_of(branch);
    auto m = [&](double t) { return -s * curvature(seg, t); };
    const auto samples = roots::sample_uniform(m, 0.0, 1.0, kThresholdSamples);
    const std::size_t n = samples.t.size();
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const double v = samples.v[i];
        best = std::max(best, v);
        const bool left_ok = i == 0 || v >= samples.v[i - 1];
        const bool right_ok = i + 1 == n || v >= samples.v[i + 1];
        if (!(left_ok && right_ok)) {
            continue;
        }
        const double a = samples.t[i == 0 ? 0 : i - 1];
        const double b = samples.t[i + 1 == n ? n - 1 : i + 1];
        const double tm = roots::golden_minimize([&](double t) { return -m(t); }, a, b);
        best = std::max(best, m(tm));
    }
    if (!(best > 0.0)) {
        return std::nullopt;
    }
    if (std::isinf(best)) {
        return 0.0;
    }
    return 2.0 / best;
}

bool branch_reversed(const PathSegment& seg, double width, Branch branch) {
    if (seg.kind() == SegmentKind::Line) {
        return false;
    }
    for (std::size_t i = 0; i <= kRootScanSamples; ++i) {
        const double t = static_cast<double>(i) / kRootScanSamples;
        if (!(offset_factor(curvature(seg, t), width, branch) < 0.0)) {
            return false;
        }
    }
    return true;
}

CuspReport build_cusp_report(const Path& path, double width) {
    CuspReport report;
    report.path_fingerprint = path.fingerprint();
    report.width = width;
    for (std::size_t s = 0; s < path.size(); ++s) {
        const PathSegment& seg = path[s];
        SegmentCuspCount count;
        count.segment_index = s;
        count.kind = seg.kind();
        count.worst_case = worst_case_offset_cusps(seg.kind());
        for (OffsetCusp& c : find_offset_cusps(seg, width, s)) {
            // A cusp at the shared end of two segments is kept once, on the earlier segment.
            if (c.t == 0.0 && s > 0 &&
                std::any_of(report.cusps.begin(), report.cusps.end(), [&](const OffsetCusp& prev) {
                    return prev.segment_index + 1 == s && prev.t == 1.0 && prev.branch == c.branch;
                })) {
                continue;
            }
            (c.branch == Branch::Positive ? count.positive : count.negative)++;
            report.cusps.push_back(c);
        }
        report.counts.push_back(count);
        for (Branch b : kBranches) {
            if (branch_reversed(seg, width, b)) {
                report.reversed.push_back({s, b});
                report.warnings.push_back("segment " + std::to_string(s) + ": " +
                                          (b == Branch::Positive ? "positive" : "negative") +
                                          " branch is reversed over the whole segment (h < 0, no cusp)");
            }
        }
    }
    return report;
}

std::vector<CuspCountViolation> audit_cusp_counts(const CuspReport& report) {
    std::vector<CuspCountViolation> out;
    for (const auto& c : report.counts) {
        if (c.total() > c.worst_case) {
            out.push_back({c.segment_index, c.kind, c.total(), c.worst_case});
        }
    }
    return out;
}

} // namespace polarstroke
