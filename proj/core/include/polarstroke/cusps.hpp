#pragma once

#include <polarstroke/diffgeo.hpp>
#include <polarstroke/path.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polarstroke {

/// A zero of h_s(t) = 1 + s * kappa(t) * w / 2 on one offset branch.
struct OffsetCusp {
    std::size_t segment_index = 0;
    double t = 0.0;
    Branch branch = Branch::Positive;
    Point2 position;
    double kappa_g = 0.0;
    /// h_s touches zero without changing sign.
    bool touching = false;

    double path_parameter() const { return static_cast<double>(segment_index) + t; }
};

struct SegmentCuspCount {
    std::size_t segment_index = 0;
    SegmentKind kind = SegmentKind::Line;
    int positive = 0;
    int negative = 0;
    int worst_case = 0;

    int total() const { return positive + negative; }
};

/// h_s < 0 over the whole segment: the branch is turned inside out with no cusp in (0, 1).
struct ReversedBranch {
    std::size_t segment_index = 0;
    Branch branch = Branch::Positive;
};

struct CuspReport {
    std::vector<OffsetCusp> cusps;
    std::vector<SegmentCuspCount> counts;
    std::vector<ReversedBranch> reversed;
    std::vector<std::string> warnings;
    std::uint64_t path_fingerprint = 0;
    double width = 0.0;
};

struct CuspCountViolation {
    std::size_t segment_index = 0;
    SegmentKind kind = SegmentKind::Line;
    int found = 0;
    int allowed = 0;
};

inline constexpr double kCuspResidual = 1e-9;

/// Both branches, sorted by t. Roots within 1e-9 of an end are snapped to it.
std::vector<OffsetCusp> find_offset_cusps(const PathSegment& seg, double width, std::size_t segment_index = 0);

/// Smallest width at which the branch develops an offset cusp: 2 / max(-s * kappa).
/// nullopt when -s * kappa <= 0 everywhere; 0 when kappa is unbounded (generator cusp).
std::optional<double> cusp_threshold_width(const PathSegment& seg, Branch branch);

/// True when h_s is negative at every scan sample and never crosses zero.
bool branch_reversed(const PathSegment& seg, double width, Branch branch);

CuspReport build_cusp_report(const Path& path, double width);

/// Segments whose total cusp count exceeds the worst case for their kind.
std::vector<CuspCountViolation> audit_cusp_counts(const CuspReport& report);

} // namespace polarstroke
