#pragma once

// Scalar root isolation on a parameter interval: uniform sign scan followed by
// bisection, plus golden-section search for touching roots and extrema.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace polarstroke::roots {

inline constexpr double kParameterTolerance = 1e-12;

inline int sign(double v) { return (v > 0.0) - (v < 0.0); }

/// Bisection on [a, b] with f(a), f(b) of opposite strict sign. Runs down to
/// float resolution of the bracket (well below kParameterTolerance) and returns
/// the endpoint with the smaller |f|.
template <typename F>
double bisect(F&& f, double a, double b, double fa, double fb) {
    for (int iter = 0; iter < 200; ++iter) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) {
            break;
        }
        const double fm = f(m);
        if (fm == 0.0) {
            return m;
        }
        if (sign(fm) == sign(fa)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return std::abs(fa) <= std::abs(fb) ? a : b;
}

/// Minimizes a unimodal f on [a, b]; returns the argmin.
template <typename F>
double golden_minimize(F&& f, double a, double b, double tol = kParameterTolerance) {
    constexpr double invphi = 0.6180339887498949;
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int iter = 0; iter < 200 && (b - a) > tol; ++iter) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    return fc < fd ? c : d;
}

struct Samples {
    std::vector<double> t;
    std::vector<double> v;
};

template <typename F>
Samples sample_uniform(F&& f, double lo, double hi, std::size_t intervals) {
    Samples s;
    s.t.resize(intervals + 1);
    s.v.resize(intervals + 1);
    for (std::size_t i = 0; i <= intervals; ++i) {
        const double t = (i == intervals) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(intervals);
        s.t[i] = t;
        s.v[i] = f(t);
    }
    return s;
}

/// A root located by the scan. `touching` marks a zero of even multiplicity
/// (|f| reaches ~0 at a local extremum without a sign change).
struct Root {
    double t = 0.0;
    bool touching = false;
};

/// Sign changes of f over the samples, refined by bisection. Exact zeros at
/// sample points are reported as roots. When `zero_tol` is positive, every
/// discrete local minimum of |f| that does not change sign is also refined by
/// golden-section search; if f changes sign there the two bracketing roots are
/// bisected, and if |f| drops below zero_tol a touching root is reported.
template <typename F>
std::vector<Root> isolate(F&& f, const Samples& s, double zero_tol) {
    std::vector<Root> out;
    const std::size_t n = s.t.size();
    auto push = [&out](double t, bool touching) {
        if (!out.empty() && std::abs(out.back().t - t) < kParameterTolerance) {
            return;
        }
        out.push_back({t, touching});
    };

    for (std::size_t i = 0; i < n; ++i) {
        if (s.v[i] == 0.0) {
            push(s.t[i], false);
            continue;
        }
        if (zero_tol > 0.0 && i > 0 && i + 1 < n) {
            const double a = std::abs(s.v[i - 1]);
            const double b = std::abs(s.v[i]);
            const double c = std::abs(s.v[i + 1]);
            const int sg = sign(s.v[i]);
            if (b <= a && b <= c && sign(s.v[i - 1]) == sg && sign(s.v[i + 1]) == sg) {
                auto mag = [&](double t) { return sg * f(t); };
                const double tm = golden_minimize(mag, s.t[i - 1], s.t[i + 1]);
                const double fm = f(tm);
                if (sign(fm) == -sg) {
                    push(bisect(f, s.t[i - 1], tm, s.v[i - 1], fm), false);
                    push(bisect(f, tm, s.t[i + 1], fm, s.v[i + 1]), false);
                } else if (std::abs(fm) < zero_tol) {
                    push(tm, true);
                }
            }
        }
        if (i + 1 < n && s.v[i + 1] != 0.0 && sign(s.v[i]) != sign(s.v[i + 1])) {
            push(bisect(f, s.t[i], s.t[i + 1], s.v[i], s.v[i + 1]), false);
        }
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) { return a.t < b.t; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Root& a, const Root& b) { return std::abs(a.t - b.t) < kParameterTolerance; }),
              out.end());
    return out;
}

} // namespace polarstroke::roots
