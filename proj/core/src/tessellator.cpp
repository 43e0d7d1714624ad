#include <polarstroke/tessellator.hpp>

#include <polarstroke/error.hpp>

#include <cmath>
#include <numbers>
#include <string>

namespace polarstroke {

namespace {

constexpr double kMergeTolerance = 1e-9;

Rib make_rib(std::size_t segment_index, double t, Point2 g, Point2 normal, double psi, double width) {
    Rib r;
    r.segment_index = segment_index;
    r.t = t;
    r.g = g;
    r.unit_normal = normal;
    r.psi = psi;
    r.P = g + normal * (0.5 * width);
    r.N = g - normal * (0.5 * width);
    return r;
}

bool coincident(const Rib& a, const Rib& b) {
    return distance(a.g, b.g) <= kMergeTolerance && distance(a.P, b.P) <= kMergeTolerance &&
           distance(a.N, b.N) <= kMergeTolerance;
}

class Builder {
public:
    explicit Builder(Quadrangulation& q) : q_(q) {}

    /// Appends ribs; the quads they span are described by `edge`.
    void append(const std::vector<Rib>& ribs, EdgeInfo edge) {
        for (const Rib& r : ribs) {
            if (!q_.ribs.empty()) {
                const Rib& last = q_.ribs.back();
                if (coincident(last, r)) {
                    continue;
                }
                EdgeInfo e = edge;
                if (distance(last.g, r.g) <= kMergeTolerance && r.segment_index != last.segment_index) {
                    e = {EdgeKind::Corner, r.segment_index, 0.0};
                }
                q_.edges.push_back(e);
            }
            q_.ribs.push_back(r);
        }
    }

private:
    Quadrangulation& q_;
};

} // namespace

void StrokeStyle::validate() const {
    if (!(std::isfinite(width) && width > 0.0)) {
        throw Error(ErrorCode::InvalidStyle, "stroke width must be positive");
    }
    if (!(quality > 0.0 && quality < 0.5 * std::numbers::pi)) {
        throw Error(ErrorCode::InvalidStyle, "quality must lie in (0, 90) degrees");
    }
}

StepPlan plan_steps(double rotation, double quality) {
    if (!(std::abs(rotation) < std::numbers::pi)) {
        throw Error(ErrorCode::RotationTooLarge, "interval rotation " + std::to_string(rotation) + " >= pi");
    }
    if (!(quality > 0.0)) {
        throw Error(ErrorCode::InvalidStyle, "quality must be positive");
    }
    const double magnitude = std::abs(rotation);
    int steps = std::max(1, static_cast<int>(std::ceil(magnitude / quality)));
    if (steps > 1 && magnitude / (steps - 1) <= quality) {
        --steps;
    }
    while (magnitude / steps > quality) {
        ++steps;
    }
    return {rotation, steps, rotation / steps};
}

double solve_angle_parameter(const PathSegment& seg, const TangentInterval& interval, double target_psi) {
    const double lo = std::min(interval.psi_lo, interval.psi_hi);
    const double hi = std::max(interval.psi_lo, interval.psi_hi);
    if (!(target_psi >= lo && target_psi <= hi)) {
        throw Error(ErrorCode::TargetOutOfInterval, "target angle " + std::to_string(target_psi) +
                                                        " outside [" + std::to_string(lo) + ", " +
                                                        std::to_string(hi) + "]");
    }
    if (target_psi == interval.psi_lo) return interval.t_lo;
    if (target_psi == interval.psi_hi) return interval.t_hi;
    return parameter_at_angle(seg, interval, target_psi);
}

std::vector<Rib> tessellate_interval(const PathSegment& seg, const TangentInterval& interval,
                                     const StrokeStyle& style) {
    style.validate();
    const StepPlan plan = plan_steps(interval.rotation, style.quality);
    std::vector<Rib> ribs;
    ribs.reserve(static_cast<std::size_t>(plan.steps) + 1);
    for (int j = 0; j <= plan.steps; ++j) {
        double t;
        double psi;
        if (j == 0) {
            t = interval.t_lo;
            psi = interval.psi_lo;
        } else if (j == plan.steps) {
            t = interval.t_hi;
            psi = interval.psi_hi;
        } else {
            psi = interval.psi_lo + j * plan.theta;
            t = solve_angle_parameter(seg, interval, psi);
        }
        const Frame f = interval_frame(seg, interval, t);
        Rib r = make_rib(interval.segment_index, t, f.position, f.unit_normal, psi, style.width);
        r.origin = RibOrigin::Interval;
        r.step = j;
        ribs.push_back(r);
    }
    return ribs;
}

StepPlan fan_plan(const GeneratorCusp& cusp, double quality) {
    const double rotation = cusp.psi_out - cusp.psi_in;
    int steps = std::max(1, static_cast<int>(std::ceil(std::abs(rotation) / quality)));
    if (steps > 1 && std::abs(rotation) / (steps - 1) <= quality) {
        --steps;
    }
    return {rotation, steps, rotation / steps};
}

std::vector<Rib> tessellate_generator_cusp(const GeneratorCusp& cusp, const StrokeStyle& style) {
    style.validate();
    const StepPlan plan = fan_plan(cusp, style.quality);
    std::vector<Rib> ribs;
    ribs.reserve(static_cast<std::size_t>(plan.steps) + 1);
    for (int k = 0; k <= plan.steps; ++k) {
        const double psi = k == plan.steps ? cusp.psi_out : cusp.psi_in + k * plan.theta;
        Rib r = make_rib(cusp.segment_index, cusp.t, cusp.position, rotate_cw(direction(psi)), psi, style.width);
        r.origin = RibOrigin::CuspFan;
        r.step = k;
        ribs.push_back(r);
    }
    return ribs;
}

Quadrangulation tessellate_path(const Path& path, const StrokeStyle& style) {
    style.validate();
    Quadrangulation q;
    q.style = style;
    q.path_fingerprint = path.fingerprint();
    Builder builder(q);

    for (std::size_t s = 0; s < path.size(); ++s) {
        const PathSegment& seg = path[s];
        const SegmentSplit split = split_segment(seg, s);
        std::size_t next_cusp = 0;
        for (const TangentInterval& iv : split.intervals) {
            // A fan goes between the interval ending at a cusp and the next one.
            while (next_cusp < split.cusps.size() && split.cusps[next_cusp].t <= iv.t_lo) {
                const GeneratorCusp& c = split.cusps[next_cusp++];
                const std::size_t fan_index = q.fans.size();
                q.fans.push_back({c, fan_plan(c, style.quality)});
                auto ribs = tessellate_generator_cusp(c, style);
                for (Rib& r : ribs) r.owner = fan_index;
                builder.append(ribs, {EdgeKind::CuspFan, fan_index, q.fans.back().plan.theta});
            }
            const std::size_t index = q.intervals.size();
            q.intervals.push_back(iv);
            q.interval_plans.push_back(plan_steps(iv.rotation, style.quality));
            auto ribs = tessellate_interval(seg, iv, style);
            for (Rib& r : ribs) r.owner = index;
            builder.append(ribs, {EdgeKind::Interval, index, q.interval_plans.back().theta});
        }
    }

    q.positive_boundary.reserve(q.ribs.size());
    q.negative_boundary.reserve(q.ribs.size());
    for (const Rib& r : q.ribs) {
        q.positive_boundary.push_back(r.P);
        q.negative_boundary.push_back(r.N);
    }
    return q;
}

} // namespace polarstroke
