#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "qdl/modular.hpp"

namespace qdl {

// Compensated accumulation of complex terms.
struct KahanSum {
    cplx s{0.0, 0.0};
    cplx c{0.0, 0.0};
    void add(cplx x) {
        cplx y = x - c;
        cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
    cplx value() const { return s; }
};

// Uniform trapezoid over t in [a,b] of f(t); f already includes dz/dt.
template <class F>
cplx trapezoid(F&& f, double a, double b, int n) {
    const double h = (b - a) / n;
    KahanSum acc;
    acc.add(0.5 * (f(a) + f(b)));
    for (int k = 1; k < n; ++k) acc.add(f(a + k * h));
    return h * acc.value();
}

// Uniform-step sum over the whole real parameter line, extending outward from
// t=0 until terms fall below tail_tol relative to the running maximum for
// `quiet_run` consecutive nodes.  Exponentially convergent for analytic
// integrands decaying at both ends.
template <class F>
cplx line_sum(F&& f, double h, double tail_tol, int max_nodes, bool* ok = nullptr,
              double min_range = 8.0) {
    KahanSum acc;
    acc.add(f(0.0));
    double peak = std::abs(acc.value());
    if (ok) *ok = false;
    const int quiet_run = 8;
    bool done_pos = false, done_neg = false;
    int quiet_pos = 0, quiet_neg = 0;
    int k = 1;
    for (; k < max_nodes / 2; ++k) {
        bool may_stop = k * h >= min_range;
        if (!done_pos) {
            cplx v = f(k * h);
            acc.add(v);
            double m = std::abs(v);
            peak = std::max(peak, m);
            quiet_pos = (m <= tail_tol * peak) ? quiet_pos + 1 : 0;
            if (may_stop && quiet_pos >= quiet_run) done_pos = true;
        }
        if (!done_neg) {
            cplx v = f(-k * h);
            acc.add(v);
            double m = std::abs(v);
            peak = std::max(peak, m);
            quiet_neg = (m <= tail_tol * peak) ? quiet_neg + 1 : 0;
            if (may_stop && quiet_neg >= quiet_run) done_neg = true;
        }
        if (done_pos && done_neg) break;
    }
    if (ok) *ok = done_pos && done_neg;
    return h * acc.value();
}

// 8-node Gauss-Legendre on [a, b].
template <class F>
cplx gauss8(F&& f, double a, double b) {
    static const double xs[4] = {0.1834346424956498, 0.5255324099163290,
                                 0.7966664774136267, 0.9602898564975363};
    static const double ws[4] = {0.3626837833783620, 0.3137066458778873,
                                 0.2223810344533745, 0.1012285362903763};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0.0;
    for (int i = 0; i < 4; ++i)
        s += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
    return half * s;
}

// 16-node Gauss-Legendre on [a, b].
template <class F>
cplx gauss16(F&& f, double a, double b) {
    static const double xs[8] = {0.0950125098376374, 0.2816035507792589,
                                 0.4580167776572274, 0.6178762444026438,
                                 0.7554044083550030, 0.8656312023878318,
                                 0.9445750230732326, 0.9894009349916499};
    static const double ws[8] = {0.1894506104550685, 0.1826034150449236,
                                 0.1691565193950025, 0.1495959888165767,
                                 0.1246289712555339, 0.0951585116824928,
                                 0.0622535239386479, 0.0271524594117541};
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    cplx s = 0.0;
    for (int i = 0; i < 8; ++i)
        s += ws[i] * (f(mid + half * xs[i]) + f(mid - half * xs[i]));
    return half * s;
}

// Composite 16-node Gauss over [a, b] with panel length <= panel.
template <class F>
cplx gauss16_composite(F&& f, double a, double b, double panel) {
    int n = std::max(1, static_cast<int>(std::ceil((b - a) / panel)));
    KahanSum acc;
    for (int i = 0; i < n; ++i)
        acc.add(gauss16(f, a + (b - a) * i / n, a + (b - a) * (i + 1) / n));
    return acc.value();
}

// C-infinity step: 0 for u <= 0, 1 for u >= 1.
inline double smooth_step(double u) {
    if (u <= 0.0) return 0.0;
    if (u >= 1.0) return 1.0;
    double fa = std::exp(-1.0 / u), fb = std::exp(-1.0 / (1.0 - u));
    return fa / (fa + fb);
}
inline double smooth_step_deriv(double u) {
    if (u <= 0.0 || u >= 1.0) return 0.0;
    double fa = std::exp(-1.0 / u), fb = std::exp(-1.0 / (1.0 - u));
    double fap = fa / (u * u), fbp = -fb / ((1.0 - u) * (1.0 - u));
    double den = fa + fb;
    return (fap * den - fa * (fap + fbp)) / (den * den);
}

// Contour for Fourier-type integrals along R with a -i0 dip near the origin
// and the tails moved smoothly to heights y_neg / y_pos where the integrand
// decays.  The transition is C-infinity, so the trapezoid rule keeps its
// spectral accuracy.  Path: t + i*eta(t), eta(0) = -eps.
struct SmoothContour {
    double eps = 0.05;       // depth of the central dip below the axis
    double ramp_from = 1.5;  // |t| where the ramp starts
    double ramp_width = 2.0;
    double y_neg = -0.05;  // asymptotic height for t -> -inf
    double y_pos = -0.05;  // asymptotic height for t -> +inf

    cplx point(double t) const {
        double sp = smooth_step((t - ramp_from) / ramp_width);
        double sn = smooth_step((-t - ramp_from) / ramp_width);
        return {t, -eps + (y_pos + eps) * sp + (y_neg + eps) * sn};
    }
    cplx derivative(double t) const {
        double dp = smooth_step_deriv((t - ramp_from) / ramp_width) / ramp_width;
        double dn = -smooth_step_deriv((-t - ramp_from) / ramp_width) / ramp_width;
        return {1.0, (y_pos + eps) * dp + (y_neg + eps) * dn};
    }
};

}  // namespace qdl
