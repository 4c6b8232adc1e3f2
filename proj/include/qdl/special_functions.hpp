#pragma once

#include <memory>
#include <vector>

#include "qdl/modular.hpp"

namespace qdl {

// Non-compact quantum dilogarithm e_b and friends.
//
// Inside the strip |Im z| < cb_mag the value is the exponential of the
// contour integral of the log-integrand along Im w = contour_offset; outside,
// the argument is reduced into the strip with the shift equations
//   e_b(z - ib/2) = (1 + e^{2 pi b z}) e_b(z + ib/2)
// and the b -> 1/b dual, factors multiplied in a fixed order.
cplx log_eb(cplx z, const ModularParameter& par, const EvalPrecision& prec);
cplx eb(cplx z, const ModularParameter& par, const EvalPrecision& prec);

// w_b(x) = e^{-i pi (1+2c_b^2)/12} e^{i pi x^2/2} / e_b(x)
cplx wb(cplx x, const ModularParameter& par, const EvalPrecision& prec);

// D_alpha(x) = w_b(x+alpha)/w_b(x-alpha) = e^{2 pi i alpha x} e_b(x-alpha)/e_b(x+alpha)
cplx D_alpha(cplx alpha, cplx x, const ModularParameter& par, const EvalPrecision& prec);

// Double sine, defined for 0 < Re x < Q by
//   log S_b(x) = int_0^inf dw/w [ sinh((Q-2x)w)/(2 sinh(bw) sinh(w/b)) - (Q-2x)/(2w) ]
// and elsewhere by the shift relation S_b(x+b) = 2 sin(pi b x) S_b(x) and its dual.
cplx log_sb(cplx x, const ModularParameter& par, const EvalPrecision& prec);
cplx sb(cplx x, const ModularParameter& par, const EvalPrecision& prec);

// e_b(0); the inversion constant e_b(x) e_b(-x) = eb0^2 e^{i pi x^2}.
cplx eb_zero(const ModularParameter& par, const EvalPrecision& prec);

// Fast evaluator of e_b along a horizontal line Im z = y0 (|y0| < cb_mag),
// backed by cubic-spline tables of the smooth log on the left half-line and
// the inversion relation on the right.  Used by the grid backend where e_b is
// applied pointwise to millions of samples.
class EbTable {
  public:
    EbTable(const ModularParameter& par, double y0, const EvalPrecision& prec);
    cplx operator()(double t) const;  // e_b(t + i y0)
    double y0() const { return y0_; }

  private:
    cplx spline_eval(const std::vector<cplx>& a, const std::vector<cplx>& b,
                     const std::vector<cplx>& c, const std::vector<cplx>& d,
                     double u) const;
    double y0_, umax_, du_;
    cplx cinv_;
    // natural cubic splines of log e_b(-u + i*(+-y0)), u in [0, umax]
    std::vector<cplx> ap_, bp_, cp_, dp_;
    std::vector<cplx> am_, bm_, cm_, dm_;
};

// Shared per-b table registry (grid operators pull real-line tables here).
const EbTable& eb_table(const ModularParameter& par, double y0 = 0.0);

}  // namespace qdl
