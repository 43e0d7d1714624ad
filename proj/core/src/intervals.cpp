#include <polarstroke/intervals.hpp>

#include <polarstroke/error.hpp>
#include <polarstroke/roots.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polarstroke {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEndMargin = 1e-9;

double principal(double a) { return std::remainder(a, kTwoPi); }

int curvature_sign(double kappa, double extent) {
    if (!(std::abs(kappa) * extent >= 1e-9)) {
        return 0;
    }
    return kappa > 0.0 ? 1 : -1;
}

/// Winding sense of a curvature-sign-constant range, read off the sample with
/// the largest |kappa|.
int range_sign(const PathSegment& seg, double a, double b) {
    double best = 0.0;
    int s = 0;
    for (int i = 1; i < 16; ++i) {
        const double t = a + (b - a) * i / 16.0;
        const double k = curvature(seg, t);
        if (std::abs(k) > best) {
            best = std::abs(k);
            s = curvature_sign(k, seg.extent());
        }
    }
    return s;
}

/// Signed turning between ta and tb by adaptive subdivision: a piece is
/// accepted once its principal angle difference is small and agrees with the
/// winding sense.
double turning(const PathSegment& seg, double ta, double tb, double pa, double pb, int sense, int depth) {
    const double d = principal(pb - pa);
    const bool settled = depth >= 3 && std::abs(d) < 0.5 && sense * d >= -1e-12;
    if (settled || depth > 60) {
        return d;
    }
    const double tm = 0.5 * (ta + tb);
    const double pm = frame(seg, tm).tangent_angle;
    return turning(seg, ta, tm, pa, pm, sense, depth + 1) + turning(seg, tm, tb, pm, pb, sense, depth + 1);
}

TangentInterval make_interval(const PathSegment& seg, std::size_t index, double a, double b, int sense) {
    TangentInterval iv;
    iv.segment_index = index;
    iv.t_lo = a;
    iv.t_hi = b;
    const Frame fa = frame(seg, a, Side::Above);
    const Frame fb = frame(seg, b, Side::Below);
    iv.psi_lo = fa.tangent_angle;
    double rot = 0.0;
    if (sense != 0) {
        rot = turning(seg, a, b, fa.tangent_angle, fb.tangent_angle, sense, 0);
        if (sense * rot < 0.0) {
            rot = 0.0;
        }
    }
    if (std::abs(rot) < kStraightRotation) {
        rot = 0.0;
    }
    iv.rotation = rot;
    iv.psi_hi = iv.psi_lo + rot;
    iv.winding = rot > 0.0 ? Winding::CounterClockwise : rot < 0.0 ? Winding::Clockwise : Winding::Straight;
    return iv;
}

/// Splits at the angle midpoint until each piece turns by less than kMaxIntervalRotation.
void append_bounded(const PathSegment& seg, const TangentInterval& iv, std::vector<TangentInterval>& out) {
    if (std::abs(iv.rotation) < kMaxIntervalRotation) {
        out.push_back(iv);
        return;
    }
    const double mid_psi = iv.psi_lo + 0.5 * iv.rotation;
    const double tm = parameter_at_angle(seg, iv, mid_psi);
    const double psi_m = unwrapped_tangent_angle(seg, iv, tm);
    TangentInterval lo = iv;
    lo.t_hi = tm;
    lo.psi_hi = psi_m;
    lo.rotation = psi_m - iv.psi_lo;
    TangentInterval hi = iv;
    hi.t_lo = tm;
    hi.psi_lo = psi_m;
    hi.rotation = iv.psi_hi - psi_m;
    append_bounded(seg, lo, out);
    append_bounded(seg, hi, out);
}

std::vector<double> find_hodograph_zeros(const PathSegment& seg) {
    if (seg.kind() == SegmentKind::Line) {
        return {};
    }
    const double eps = derivative_tolerance(seg);
    auto speed_slope = [&seg](double t) {
        const Jet j = jet(seg, t);
        return dot(j.first, j.second);
    };
    const auto samples = roots::sample_uniform(speed_slope, 0.0, 1.0, kRootScanSamples);
    std::vector<double> out;
    for (const auto& r : roots::isolate(speed_slope, samples, 0.0)) {
        if (r.t <= kEndMargin || r.t >= 1.0 - kEndMargin) {
            continue;
        }
        if (norm(derivative(seg, r.t, 1)) <= eps) {
            out.push_back(r.t);
        }
    }
    return out;
}

std::vector<double> find_inflections(const PathSegment& seg) {
    if (seg.kind() == SegmentKind::Line) {
        return {};
    }
    const double extent = seg.extent();
    auto kappa = [&seg](double t) { return curvature(seg, t); };
    const auto samples = roots::sample_uniform(kappa, 0.0, 1.0, kRootScanSamples);
    double peak = 0.0;
    for (double v : samples.v) {
        peak = std::max(peak, std::abs(v));
    }
    if (!(peak * extent >= 1e-9)) {
        return {};
    }
    std::vector<double> out;
    for (const auto& r : roots::isolate(kappa, samples, 1e-9 / extent)) {
        if (r.t > kEndMargin && r.t < 1.0 - kEndMargin) {
            out.push_back(r.t);
        }
    }
    return out;
}

} // namespace

SegmentSplit split_segment(const PathSegment& seg, std::size_t segment_index) {
    if (!(seg.extent() > 0.0)) {
        throw Error(ErrorCode::DegenerateSegment, "segment collapses to a point");
    }
    SegmentSplit result;

    const std::vector<double> cusp_ts = find_hodograph_zeros(seg);
    for (double t : cusp_ts) {
        const Frame below = frame(seg, t, Side::Below);
        const double k = curvature(seg, t);
        const double sense = k < 0.0 ? -1.0 : 1.0;
        GeneratorCusp c;
        c.segment_index = segment_index;
        c.t = t;
        c.position = evaluate(seg, t);
        c.psi_in = below.tangent_angle;
        c.psi_out = below.tangent_angle + sense * std::numbers::pi;
        result.cusps.push_back(c);
    }

    std::vector<double> splits = cusp_ts;
    for (double t : find_inflections(seg)) {
        const bool near_cusp = std::any_of(cusp_ts.begin(), cusp_ts.end(),
                                           [t](double c) { return std::abs(c - t) < kEndMargin; });
        if (!near_cusp) {
            splits.push_back(t);
        }
    }
    std::sort(splits.begin(), splits.end());
    splits.erase(std::unique(splits.begin(), splits.end(),
                             [](double a, double b) { return std::abs(a - b) < kEndMargin; }),
                 splits.end());

    std::vector<double> bounds;
    bounds.push_back(0.0);
    bounds.insert(bounds.end(), splits.begin(), splits.end());
    bounds.push_back(1.0);

    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const double a = bounds[i];
        const double b = bounds[i + 1];
        const int sense = range_sign(seg, a, b);
        append_bounded(seg, make_interval(seg, segment_index, a, b, sense), result.intervals);
    }
    return result;
}

double interval_rotation(const TangentInterval& interval) { return interval.psi_hi - interval.psi_lo; }

int winding_sign(const TangentInterval& interval) {
    switch (interval.winding) {
    case Winding::CounterClockwise: return 1;
    case Winding::Clockwise: return -1;
    case Winding::Straight: return 0;
    }
    return 0;
}

Frame interval_frame(const PathSegment& seg, const TangentInterval& interval, double t) {
    return frame(seg, t, t >= interval.t_hi ? Side::Below : Side::Above);
}

double unwrapped_tangent_angle(const PathSegment& seg, const TangentInterval& interval, double t) {
    const double raw = interval_frame(seg, interval, t).tangent_angle;
    const int sense = winding_sign(interval);
    if (sense == 0) {
        return interval.psi_lo + principal(raw - interval.psi_lo);
    }
    // True offsets lie in [0, |rotation|]; center the 2pi window on that range.
    const double span = std::abs(interval.rotation);
    const double low = -0.5 * (kTwoPi - span);
    double m = sense * (raw - interval.psi_lo);
    m -= kTwoPi * std::floor((m - low) / kTwoPi);
    return interval.psi_lo + sense * m;
}

double parameter_at_angle(const PathSegment& seg, const TangentInterval& interval, double target_psi) {
    const int sense = winding_sign(interval);
    if (sense == 0 || sense * (target_psi - interval.psi_lo) <= 0.0) {
        return interval.t_lo;
    }
    if (sense * (target_psi - interval.psi_hi) >= 0.0) {
        return interval.t_hi;
    }
    double a = interval.t_lo;
    double b = interval.t_hi;
    double best_t = a;
    double best_err = std::abs(target_psi - interval.psi_lo);
    for (int iter = 0; iter < 200; ++iter) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) {
            break;
        }
        const double diff = sense * (unwrapped_tangent_angle(seg, interval, m) - target_psi);
        if (std::abs(diff) < best_err) {
            best_err = std::abs(diff);
            best_t = m;
        }
        if (diff == 0.0) {
            break;
        }
        if (diff < 0.0) {
            a = m;
        } else {
            b = m;
        }
    }
    return best_t;
}

} // namespace polarstroke
