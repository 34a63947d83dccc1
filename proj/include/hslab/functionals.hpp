#pragma once

#include "hslab/field.hpp"
#include "hslab/params.hpp"
#include "hslab/profile.hpp"
#include "hslab/quadrature.hpp"

namespace hslab {

// \int |grad u|^p dx (the p-th power, not the root).
double grad_pnorm(const RadialProfile& u, const Params& P, double rel_tol = 1e-10);
double grad_pnorm(const AxisymField& u, const Params& P, double rel_tol = 1e-9);

// \int |x|^{-beta} |u|^{pstar} dx.
double weighted_starnorm(const RadialProfile& u, const Params& P,
                         double rel_tol = 1e-10);
double weighted_starnorm(const AxisymField& u, const Params& P,
                         double rel_tol = 1e-9);

// Sharp constant S_beta = (\int |grad U_1|^p)^{(pstar-p)/pstar}; computed on
// first use at a fixed internal tolerance and cached on the Params box.
double sharp_constant(const Params& P);

struct DeficitReport {
    double grad_p = 0.0;      // \int |grad u|^p
    double star_int = 0.0;    // \int |x|^{-beta}|u|^{pstar}
    double star_p = 0.0;      // star_int^{p/pstar}
    double sharp = 0.0;
    double deficit = 0.0;     // grad_p - sharp * star_p
    double quad_error = 0.0;
    bool proved_regime = true;
};

DeficitReport deficit(const RadialProfile& u, const Params& P,
                      double rel_tol = 1e-10);
DeficitReport deficit(const AxisymField& u, const Params& P,
                      double rel_tol = 1e-9);

// Second-variation pair for a radial direction v in the angular sector k:
//   A = (p-1) \int |U'|^{p-2} v'^2 r^{N-1} + k(N-2+k) \int |U'|^{p-2} v^2 r^{N-3}
//   B = \int r^{N-1-beta} U^{pstar-2} v^2
// (sphere factor included in both; ratios are what matter downstream).
struct FormPair {
    double A = 0.0;
    double B = 0.0;
};

FormPair quadratic_form(const RadialProfile& v, int k, const Params& P,
                        double rel_tol = 1e-10);

}  // namespace hslab
