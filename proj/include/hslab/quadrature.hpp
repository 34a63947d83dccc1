#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "hslab/params.hpp"

namespace hslab {

// Declared endpoint behavior of the bare integrand f (before the r^{N-1-w}
// measure factor).  origin_exponent: f ~ r^{origin_exponent} as r -> 0.
// tail_exponent: f ~ r^{-tail_exponent} as r -> inf.  Conservative (more
// singular / slower) declarations are safe; optimistic ones are caught by the
// self-convergence loop.
struct QuadOptions {
    double origin_exponent = 0.0;
    double tail_exponent = 1e9;
    std::optional<double> support_radius;
    std::vector<double> breakpoints;
    int nodes_per_panel = 16;
    int max_rounds = 7;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    double l1_mass = 0.0;
    int rounds = 0;
    long evaluations = 0;
};

// sphere_area * \int_0^inf f(r) r^{N-1-weight_exponent} dr.
//
// Panels are Gauss-Legendre, geometrically graded toward r = 0 (ratio 1/2)
// with the grading depth chosen from the declared origin exponent; the tail
// is folded to [0, 1] through r = 1/t and graded the same way.  Refinement
// rounds split every panel in half until the change drops below
// rel_tol * l1_mass.  Throws SingularityError if the declared exponents make
// the integral divergent, ConvergenceError if the round budget is exhausted.
QuadResult radial_integral_full(const std::function<double(double)>& f,
                                double weight_exponent, const Params& P,
                                double rel_tol, const QuadOptions& opts = {});

double radial_integral(const std::function<double(double)>& f,
                       double weight_exponent, const Params& P, double rel_tol,
                       const QuadOptions& opts = {});

struct AxisymQuadOptions {
    QuadOptions radial;
    int angular_nodes = 48;
    // (theta0, width): localized angular structure; panels are graded toward
    // theta0 down to ~width/4 instead of using one spectral rule.
    std::optional<std::pair<double, double>> angular_feature;
    int max_rounds = 5;
};

// sphere_area_sub * \int_0^inf \int_0^pi g(rho, theta) rho^{N-1-weight}
// sin^{N-2}(theta) dtheta drho, with the same refinement contract.
QuadResult axisym_integral_full(const std::function<double(double, double)>& g,
                                double weight_exponent, const Params& P,
                                double rel_tol, const AxisymQuadOptions& opts = {});

double axisym_integral(const std::function<double(double, double)>& g,
                       double weight_exponent, const Params& P, double rel_tol,
                       const AxisymQuadOptions& opts = {});

// Frozen node/weight sets, used where an optimization loop must see a smooth
// objective: every iterate is integrated with the identical rule.
struct RadialRule {
    std::vector<double> r;
    std::vector<double> w;  // includes r^{N-1} and the sphere factor
};

struct AxisymRule {
    std::vector<double> rho;
    std::vector<double> wr;     // radial weight incl. rho^{N-1}
    std::vector<double> theta;
    std::vector<double> wt;     // angular weight incl. sin^{N-2} and sub-sphere factor
};

RadialRule make_radial_rule(const Params& P, const QuadOptions& opts,
                            int extra_rounds = 1);
AxisymRule make_axisym_rule(const Params& P, const AxisymQuadOptions& opts,
                            int extra_rounds = 1);

}  // namespace hslab
