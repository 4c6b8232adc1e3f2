#include "qdl/special_functions.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "qdl/quadrature.hpp"

namespace qdl {
namespace {

// log(1 + exp(u)) without overflow; throws when 1 + e^u vanishes (pole/zero
// of a shift factor).
cplx log1pexp(cplx u) {
    if (u.real() > 36.0) return u + std::log(1.0 + std::exp(-u));
    cplx w = 1.0 + std::exp(u);
    if (std::abs(w) < 1e-14) throw PoleHit("shift factor 1+e^u vanished");
    return std::log(w);
}

// Core integral: valid for |Im z| < cb_mag with margin.  The node spacing
// resolves both the pole-limited analyticity band and the e^{-2izw}
// oscillation (frequency 2|Re z|).
cplx log_eb_core(cplx z, const ModularParameter& par, const EvalPrecision& prec) {
    const double minb = par.min_b();
    double eps = prec.contour_offset > 0.0 ? prec.contour_offset : 0.5 * pi * minb;
    if (eps >= pi * minb) throw std::invalid_argument("contour_offset beyond first pole");
    const double band = std::min(eps, pi * minb - eps);
    const double h =
        std::min(0.35 * band, 2.0 * pi / (2.0 * std::abs(z.real()) + 150.0 / band));
    const double b = par.b;
    auto f = [&](double t) -> cplx {
        cplx w(t, eps);
        return std::exp(-2.0 * iu * z * w) / (w * std::sinh(b * w) * std::sinh(w / b));
    };
    bool ok = false;
    cplx val = line_sum(f, h, 1e-18, prec.max_quadrature_nodes, &ok);
    if (!ok) throw QuadratureFail("log_eb: tail did not converge");
    return 0.25 * val;
}

}  // namespace

cplx log_eb(cplx z, const ModularParameter& par, const EvalPrecision& prec) {
    // Reduce Im z into [-L/2, L/2] with the larger shift L = max(b, 1/b);
    // factors are multiplied in order of decreasing imaginary part.
    const double L = std::max(par.b, 1.0 / par.b);
    cplx lacc = 0.0;
    cplx w = z;
    int guard = 0;
    while (w.imag() > 0.5 * L) {
        // e_b(w) = e_b(w - iL) / (1 + e^{2 pi L (w - iL/2)})
        lacc -= log1pexp(2.0 * pi * L * (w - 0.5 * iu * L));
        w -= iu * L;
        if (++guard > 4000) throw QuadratureFail("log_eb: reduction stalled");
    }
    while (w.imag() < -0.5 * L) {
        // e_b(w) = (1 + e^{2 pi L (w + iL/2)}) e_b(w + iL)
        lacc += log1pexp(2.0 * pi * L * (w + 0.5 * iu * L));
        w += iu * L;
        if (++guard > 4000) throw QuadratureFail("log_eb: reduction stalled");
    }
    return lacc + log_eb_core(w, par, prec);
}

cplx eb(cplx z, const ModularParameter& par, const EvalPrecision& prec) {
    return std::exp(log_eb(z, par, prec));
}

cplx wb(cplx x, const ModularParameter& par, const EvalPrecision& prec) {
    // 1 + 2 c_b^2 = 1 - 2 cb_mag^2
    cplx zw = std::exp(-iu * pi * (1.0 - 2.0 * par.cb_mag * par.cb_mag) / 12.0);
    return zw * std::exp(0.5 * iu * pi * x * x - log_eb(x, par, prec));
}

cplx D_alpha(cplx alpha, cplx x, const ModularParameter& par, const EvalPrecision& prec) {
    if (alpha == cplx(0.0, 0.0)) return 1.0;
    return std::exp(2.0 * pi * iu * alpha * x + log_eb(x - alpha, par, prec) -
                    log_eb(x + alpha, par, prec));
}

cplx log_sb(cplx x, const ModularParameter& par, const EvalPrecision& prec) {
    const double Q = par.Q_sum;
    const double b = par.b;
    const double L = std::max(b, 1.0 / b);  // S_b(x+L) = 2 sin(pi L x) S_b(x)
    // shift into the band delta <= Re x <= Q - delta
    cplx lacc = 0.0;
    cplx w = x;
    const double delta = 0.2 * par.min_b();
    int guard = 0;
    while (w.real() > Q - delta) {
        w -= L;
        cplx s = 2.0 * std::sin(pi * L * w);
        if (std::abs(s) < 1e-13) throw PoleHit("sb: shift factor vanished");
        lacc += std::log(s);
        if (++guard > 4000) throw QuadratureFail("sb: reduction stalled");
    }
    while (w.real() < delta) {
        cplx s = 2.0 * std::sin(pi * L * w);
        if (std::abs(s) < 1e-13) throw PoleHit("sb: shift factor vanished");
        lacc -= std::log(s);
        w += L;
        if (++guard > 4000) throw QuadratureFail("sb: reduction stalled");
    }

    const cplx a = Q - 2.0 * w;  // |Re a| < Q inside the band
    const double decay = Q - std::abs(a.real());
    const double osc = std::abs(a.imag());
    auto integrand = [&](double t) -> cplx {
        return (std::sinh(a * t) / (2.0 * std::sinh(b * t) * std::sinh(t / b)) - a / (2.0 * t)) / t;
    };
    // head [0, w0] separately (integrand regular but the cancellation is
    // delicate there); then Gauss panels out to W; analytic -a/(2 t^2) tail
    const double w0 = 0.25;
    cplx head = gauss16(integrand, 0.0, 0.5 * w0) + gauss16(integrand, 0.5 * w0, w0);
    const double panel = std::min(1.25, 18.0 / (1.0 + osc));
    const double W = std::max(44.0 / decay, 8.0);
    if (W / panel * 16 > prec.max_quadrature_nodes) throw QuadratureFail("sb: too many nodes");
    cplx body = gauss16_composite(integrand, w0, W, panel);
    cplx tail = -a / (2.0 * W);  // int_W^inf -a/(2 t^2) dt
    return lacc + head + body + tail;
}

cplx sb(cplx x, const ModularParameter& par, const EvalPrecision& prec) {
    return std::exp(log_sb(x, par, prec));
}

cplx eb_zero(const ModularParameter& par, const EvalPrecision& prec) {
    return eb(cplx(0.0, 0.0), par, prec);
}

// ---------------------------------------------------------------------------
// EbTable

namespace {
// natural cubic spline coefficients on a uniform grid
void build_spline(const std::vector<cplx>& y, double du, std::vector<cplx>& a,
                  std::vector<cplx>& b, std::vector<cplx>& c, std::vector<cplx>& d) {
    const int n = static_cast<int>(y.size()) - 1;
    std::vector<cplx> alpha(n + 1, 0.0), mu(n + 1, 0.0), z(n + 1, 0.0), cc(n + 1, 0.0);
    for (int i = 1; i < n; ++i)
        alpha[i] = 3.0 * (y[i + 1] - 2.0 * y[i] + y[i - 1]) / du;
    std::vector<double> l(n + 1, 1.0);
    for (int i = 1; i < n; ++i) {
        l[i] = 4.0 * du - du * mu[i - 1].real();
        mu[i] = du / l[i];
        z[i] = (alpha[i] - du * z[i - 1]) / l[i];
    }
    for (int j = n - 1; j >= 0; --j) cc[j] = z[j] - mu[j] * cc[j + 1];
    a.assign(y.begin(), y.end() - 1);
    b.resize(n);
    c.assign(cc.begin(), cc.end() - 1);
    d.resize(n);
    for (int i = 0; i < n; ++i) {
        b[i] = (y[i + 1] - y[i]) / du - du * (cc[i + 1] + 2.0 * cc[i]) / 3.0;
        d[i] = (cc[i + 1] - cc[i]) / (3.0 * du);
    }
}
}  // namespace

EbTable::EbTable(const ModularParameter& par, double y0, const EvalPrecision& prec) : y0_(y0) {
    const double minb = par.min_b();
    if (std::abs(y0) >= par.cb_mag - 1e-9)
        throw std::invalid_argument("EbTable: line outside analyticity strip");
    umax_ = std::ceil(42.0 / (2.0 * pi * minb) + std::abs(y0) + 2.0);
    du_ = 0.002;
    const int n = static_cast<int>(umax_ / du_) + 1;
    cinv_ = std::exp(2.0 * log_eb(cplx(0, 0), par, prec));
    std::vector<cplx> yp(n + 1), ym(n + 1);
    for (int i = 0; i <= n; ++i) {
        double u = -i * du_;
        yp[i] = log_eb(cplx(u, y0), par, prec);
        ym[i] = (y0 == 0.0) ? yp[i] : log_eb(cplx(u, -y0), par, prec);
    }
    build_spline(yp, du_, ap_, bp_, cp_, dp_);
    if (y0 == 0.0) {
        am_ = ap_; bm_ = bp_; cm_ = cp_; dm_ = dp_;
    } else {
        build_spline(ym, du_, am_, bm_, cm_, dm_);
    }
    umax_ = n * du_;
}

cplx EbTable::spline_eval(const std::vector<cplx>& a, const std::vector<cplx>& b,
                          const std::vector<cplx>& c, const std::vector<cplx>& d,
                          double u) const {
    // u >= 0 measures distance to the left of 0; beyond the table log e_b ~ 0
    if (u >= umax_) return 0.0;
    int i = static_cast<int>(u / du_);
    if (i >= static_cast<int>(a.size())) i = static_cast<int>(a.size()) - 1;
    double x = u - i * du_;
    return a[i] + x * (b[i] + x * (c[i] + x * d[i]));
}

cplx EbTable::operator()(double t) const {
    if (t <= 0.0) return std::exp(spline_eval(ap_, bp_, cp_, dp_, -t));
    // e_b(z) = cinv e^{i pi z^2} / e_b(-z)
    cplx z(t, y0_);
    return cinv_ * std::exp(iu * pi * z * z - spline_eval(am_, bm_, cm_, dm_, t));
}

const EbTable& eb_table(const ModularParameter& par, double y0) {
    static std::map<std::pair<long long, long long>, std::unique_ptr<EbTable>> registry;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(static_cast<long long>(std::llround(par.b * 1e12)),
                              static_cast<long long>(std::llround(y0 * 1e12)));
    auto it = registry.find(key);
    if (it == registry.end()) {
        it = registry.emplace(key, std::make_unique<EbTable>(par, y0, EvalPrecision::standard()))
                 .first;
    }
    return *it->second;
}

}  // namespace qdl
