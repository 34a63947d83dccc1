#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hslab/params.hpp"
#include "hslab/profile.hpp"

namespace hslab {

// Axisymmetric scalar field on R^N in spherical coordinates (rho, theta),
// theta measured from the symmetry axis.  grad_rho is d/drho, grad_ang is
// (1/rho) d/dtheta, so |grad u|^2 = grad_rho^2 + grad_ang^2.
struct AxisymField {
    std::function<double(double, double)> value;
    std::function<double(double, double)> grad_rho;
    std::function<double(double, double)> grad_ang;
    std::optional<double> support;
    std::vector<double> rho_breakpoints;
    std::optional<std::pair<double, double>> angular_feature;
    double origin_exp_value = 0.0;
    double origin_exp_grad = -1.0;
    double tail_exp_value = RadialProfile::kUnboundedTail;
    double tail_exp_grad = RadialProfile::kUnboundedTail;

    double grad_sq(double rho, double th) const {
        double a = grad_rho(rho, th), b = grad_ang(rho, th);
        return a * a + b * b;
    }
};

AxisymField axisym_from_radial(const RadialProfile& u);

// u_n(x) = (|x| / |A x|)^{beta/pstar} U(A x) with A = diag(1,..,1,a),
// a = 1 + 1/n: the squeezed extremal whose weighted norm follows the
// determinant exactly.  Gradients are analytic; a seeded 50-point central
// difference audit (relative 1e-5) runs at construction and throws on
// mismatch.
AxisymField diagonal_squeeze_field(const Params& P, double n);

// U(x) + eps * (|x|/|x0+x|)^{beta/pstar} phi(x0 + x) with phi the unit smooth
// bump and |x0| = x0_norm; the dressing keeps the bump's weighted p*-norm
// independent of x0.  Same construction audit as above.
AxisymField shifted_bump_field(const Params& P, double x0_norm, double eps);

// Central-difference audit of the analytic gradient channels at seeded
// points; returns the worst relative mismatch.
double field_gradient_mismatch(const AxisymField& f, double rho_lo, double rho_hi,
                               int n_points, unsigned long long seed);

}  // namespace hslab
