#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qdl/quadrature.hpp"
#include "qdl/special_functions.hpp"

using namespace qdl;

namespace {

// Independent oracle: direct quadrature of the defining contour integral with
// 10x the node density and twice the contour extent of the production path.
// Valid only inside the strip; no shift-relation reuse.
cplx log_eb_oracle(cplx z, const ModularParameter& par) {
    const double eps = 0.31 * pi * par.min_b();  // different offset on purpose
    const double h = 0.004;
    const double T = 2.0 * (44.0 / (2.0 * (par.cb_mag - std::abs(z.imag()))) + 8.0);
    const double b = par.b;
    auto f = [&](double t) -> cplx {
        cplx w(t, eps);
        return std::exp(-2.0 * iu * z * w) / (w * std::sinh(b * w) * std::sinh(w / b));
    };
    int n = static_cast<int>(2.0 * T / h);
    return 0.25 * trapezoid(f, -T, T, n);
}

}  // namespace

TEST_CASE("eb on the real axis is unimodular") {
    EvalPrecision prec;
    for (double b : {0.6, 0.7, 0.9, 0.99}) {
        ModularParameter par(b);
        for (int k = 0; k < 25; ++k) {
            double x = -6.0 + 12.0 * k / 24.0;
            CHECK(std::abs(std::abs(eb(cplx(x, 0), par, prec)) - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("eb self-duality under b <-> 1/b") {
    EvalPrecision prec;
    ModularParameter par(0.7), dual(1.0 / 0.7);
    for (cplx z : {cplx(0.3, 0.0), cplx(-1.2, 0.4), cplx(2.0, -0.6), cplx(0.0, 0.9)}) {
        cplx a = eb(z, par, prec), c = eb(z, dual, prec);
        CHECK(std::abs(a - c) < 1e-12 * std::abs(a));
    }
}

TEST_CASE("eb matches the independent oracle quadrature") {
    EvalPrecision prec;
    for (double b : {0.8, 0.6}) {
        ModularParameter par(b);
        for (cplx z : {cplx(0.0, 0.0), cplx(0.45, 0.2), cplx(-1.3, -0.3)}) {
            cplx lhs = log_eb(z, par, prec);
            cplx rhs = log_eb_oracle(z, par);
            CHECK(std::abs(lhs - rhs) < 1e-11);
        }
    }
}

TEST_CASE("eb shift equations in b and 1/b") {
    EvalPrecision prec;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ur(-2.0, 2.0);
    for (double b : {0.6, 0.9}) {
        ModularParameter par(b);
        for (int k = 0; k < 10; ++k) {
            cplx z(ur(rng), 0.3 * ur(rng));
            for (double step : {par.b, 1.0 / par.b}) {
                cplx lhs = eb(z - 0.5 * iu * step, par, prec);
                cplx rhs = (1.0 + std::exp(2.0 * pi * step * z)) * eb(z + 0.5 * iu * step, par, prec);
                CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
            }
        }
    }
}

TEST_CASE("eb inversion product is constant in z") {
    // eb(z) eb(-z) e^{-i pi z^2} should not depend on z; the frozen
    // regression value is e^{-i pi (1+2 c_b^2)/6}, equal to eb(0)^2.
    EvalPrecision prec;
    ModularParameter par(0.75);
    cplx expect = std::exp(-iu * pi * (1.0 - 2.0 * par.cb_mag * par.cb_mag) / 6.0);
    for (cplx z : {cplx(0.0, 0.0), cplx(0.7, 0.2), cplx(-1.1, -0.4), cplx(2.3, 0.0)}) {
        cplx v = eb(z, par, prec) * eb(-z, par, prec) * std::exp(-iu * pi * z * z);
        CHECK(std::abs(v - expect) < 1e-11);
    }
    // eb(0) itself lands on the 12th-root phase
    cplx e0 = eb_zero(par, prec);
    CHECK(std::abs(e0 - std::exp(-iu * pi * (1.0 - 2.0 * par.cb_mag * par.cb_mag) / 12.0)) < 1e-12);
}

TEST_CASE("wb consistency and parity ratio") {
    EvalPrecision prec;
    ModularParameter par(0.75);
    cplx konst = std::exp(-iu * pi * (1.0 - 2.0 * par.cb_mag * par.cb_mag) / 12.0);
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ur(-1.5, 1.5);
    for (int k = 0; k < 10; ++k) {
        cplx x(ur(rng), 0.2 * ur(rng));
        cplx v = eb(x, par, prec) * wb(x, par, prec) * std::exp(-0.5 * iu * pi * x * x);
        CHECK(std::abs(v - konst) < 1e-10);
    }
    // |wb| on the real axis: unimodular there; parity ratio has no chirp
    for (double x : {-0.8, 0.2, 1.7}) {
        CHECK(std::abs(std::abs(wb(cplx(x, 0), par, prec)) - 1.0) < 1e-10);
        cplx lhs = wb(cplx(x, 0), par, prec) / wb(cplx(-x, 0), par, prec);
        cplx rhs = eb(cplx(-x, 0), par, prec) / eb(cplx(x, 0), par, prec);
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("D_alpha identities") {
    EvalPrecision prec;
    ModularParameter par(0.7);
    CHECK(D_alpha(cplx(0, 0), cplx(1.2, 0.3), par, prec) == cplx(1.0, 0.0));
    cplx a(0.3, 0.1);
    for (double x : {0.2, -0.9, 1.4}) {
        cplx l = D_alpha(a, cplx(x, 0), par, prec);
        cplx r = D_alpha(a, cplx(-x, 0), par, prec);
        CHECK(std::abs(l - r) < 1e-10 * std::abs(l));
        // compositional oracle from two independent eb evaluations
        cplx o = std::exp(2.0 * pi * iu * a * x) * eb(cplx(x, 0) - a, par, prec) /
                 eb(cplx(x, 0) + a, par, prec);
        CHECK(std::abs(l - o) < 1e-10 * std::abs(l));
    }
}

TEST_CASE("sb functional equations") {
    EvalPrecision prec;
    std::mt19937_64 rng(17);
    for (double b : {0.6, 0.7, 0.9, 0.99}) {
        ModularParameter par(b);
        double Q = par.Q_sum;
        CHECK(std::abs(sb(cplx(0.5 * Q, 0), par, prec) - 1.0) < 1e-12);
        std::uniform_real_distribution<double> ur(0.1, 0.9);
        std::uniform_real_distribution<double> ui(-1.0, 1.0);
        for (int k = 0; k < 20; ++k) {
            cplx x(ur(rng) * Q, 0.5 * ui(rng));
            cplx lhs = sb(x + b, par, prec);
            cplx rhs = 2.0 * std::sin(pi * b * x) * sb(x, par, prec);
            CHECK(std::abs(lhs - rhs) < 1e-10 * std::abs(lhs));
            cplx dual = sb(x + 1.0 / b, par, prec);
            cplx dualr = 2.0 * std::sin(pi * x / b) * sb(x, par, prec);
            CHECK(std::abs(dual - dualr) < 1e-10 * std::abs(dual));
            cplx inv = sb(x, par, prec) * sb(Q - x, par, prec);
            CHECK(std::abs(inv - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("sb via the wb link (numerically established relation)") {
    // S_b(x) * e_b(i(x-Q/2)) * e^{i pi (x-Q/2)^2 / 2} is constant in x;
    // the constant is e_b(0).
    EvalPrecision prec;
    ModularParameter par(0.7);
    cplx c0 = eb_zero(par, prec);
    for (cplx x : {cplx(0.4, 0.0), cplx(1.1, 0.35), cplx(0.9, -1.2)}) {
        cplx y = iu * (x - 0.5 * par.Q_sum);
        cplx v = sb(x, par, prec) * eb(y, par, prec) *
                 std::exp(0.5 * iu * pi * (x - 0.5 * par.Q_sum) * (x - 0.5 * par.Q_sum));
        CHECK(std::abs(v - c0) < 1e-10);
    }
}

TEST_CASE("EbTable agrees with direct evaluation") {
    EvalPrecision prec;
    ModularParameter par(0.7);
    const EbTable& tab = eb_table(par, 0.0);
    for (double t : {-9.5, -3.2, -0.7, 0.0, 0.4, 2.8, 11.0}) {
        cplx direct = eb(cplx(t, 0), par, prec);
        CHECK(std::abs(tab(t) - direct) < 2e-9);
    }
}

TEST_CASE("PoleHit raised near the pole lattice") {
    EvalPrecision prec;
    ModularParameter par(0.7);
    cplx pole = par.cb() + iu * par.b;  // c_b + i b
    CHECK_THROWS_AS((void)eb(pole, par, prec), PoleHit);
}
