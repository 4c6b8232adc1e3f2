#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qdl {

using cplx = std::complex<double>;
inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr cplx iu{0.0, 1.0};

// Numeric failure modes shared across the library.
struct PoleHit : std::runtime_error {
    explicit PoleHit(const std::string& what) : std::runtime_error(what) {}
};
struct QuadratureFail : std::runtime_error {
    explicit QuadratureFail(const std::string& what) : std::runtime_error(what) {}
};
struct AliasingDetected : std::runtime_error {
    explicit AliasingDetected(const std::string& what) : std::runtime_error(what) {}
};
struct ClassViolation : std::runtime_error {
    explicit ClassViolation(const std::string& what) : std::runtime_error(what) {}
};
struct BranchAmbiguity : std::runtime_error {
    explicit BranchAmbiguity(const std::string& what) : std::runtime_error(what) {}
};
struct ContourPinch : std::runtime_error {
    explicit ContourPinch(const std::string& what) : std::runtime_error(what) {}
};

// Deformation parameter b together with the constants derived from it.
// c_b is purely imaginary, c_b = i*cb_mag; we store the magnitude.
struct ModularParameter {
    double b = 0.7;
    double cb_mag = 0.0;     // (b + 1/b)/2,  c_b = i*cb_mag
    double Q_sum = 0.0;      // b + 1/b
    cplx q_phase;            // exp(i pi b^2)
    cplx zeta0;              // exp(i pi (1 - 4 c_b^2)/12), c_b^2 = -cb_mag^2

    explicit ModularParameter(double b_in) : b(b_in) {
        if (!(b > 0.0)) throw std::invalid_argument("ModularParameter: b must be > 0");
        Q_sum = b + 1.0 / b;
        cb_mag = 0.5 * Q_sum;
        q_phase = std::exp(iu * pi * b * b);
        zeta0 = std::exp(iu * pi * (1.0 + 4.0 * cb_mag * cb_mag) / 12.0);
    }

    cplx cb() const { return cplx(0.0, cb_mag); }       // c_b = i(b+1/b)/2
    double cb2() const { return -cb_mag * cb_mag; }     // c_b^2 (real, negative)
    cplx q() const { return q_phase; }
    double min_b() const { return b < 1.0 / b ? b : 1.0 / b; }
};

struct EvalPrecision {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    int max_quadrature_nodes = 200000;
    double contour_offset = 0.0;  // 0 => choose pi*min(b,1/b)/2 automatically

    static EvalPrecision standard() { return EvalPrecision{}; }
    static EvalPrecision fast() {
        EvalPrecision p;
        p.abs_tol = 1e-10;
        p.rel_tol = 1e-9;
        p.max_quadrature_nodes = 40000;
        return p;
    }
};

}  // namespace qdl
