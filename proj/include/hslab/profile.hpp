#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "hslab/params.hpp"

namespace hslab {

// One radial function r -> value with its analytic derivative.  Endpoint
// hints feed the quadrature engine: origin exponents are the leading powers
// of value/dvalue as r -> 0, tail exponents the decay powers as r -> inf
// (value ~ r^{-tail}).  Compactly supported profiles set support instead and
// leave the tail hints at kUnbounded.
struct RadialProfile {
    std::function<double(double)> value;
    std::function<double(double)> dvalue;
    std::optional<double> support;
    std::vector<double> breakpoints;
    double origin_exp_value = 0.0;
    double origin_exp_dvalue = 0.0;
    double tail_exp_value = kUnboundedTail;
    double tail_exp_dvalue = kUnboundedTail;

    static constexpr double kUnboundedTail = 1e9;

    double operator()(double r) const { return value(r); }
};

// Extremal profile U_lambda; dvalue(0) returns a signed-infinity sentinel
// when the gradient amplitude diverges at the origin (beta > 1).
RadialProfile extremal(const Params& P, double lambda);

// (U_lambda, Z_lambda) with Z_lambda = d/dlambda U_lambda evaluated
// analytically.  Z_lambda has a single sign change at
// r = (p-1)^{(p-1)/(p-beta)} / lambda.
std::pair<RadialProfile, RadialProfile> tangent_basis(const Params& P, double lambda);

// Smooth compactly supported bump a * exp(-1/(1-u^2)), u = (r-center)/width,
// restricted to |u| < 1.
RadialProfile bump_profile(double center, double width, double amplitude = 1.0);

// Smooth cutoff: 1 on [0, inner], 0 beyond outer, C^inf transition.
RadialProfile cutoff_profile(double inner, double outer);

// r^gamma times cutoff_profile(outer/2, outer).
RadialProfile truncated_power(double gamma, double outer);

RadialProfile scale_profile(double c, const RadialProfile& u);
RadialProfile lincomb(const std::vector<double>& coeff,
                      const std::vector<RadialProfile>& parts);
RadialProfile product_profile(const RadialProfile& a, const RadialProfile& b);

// max_i |dvalue(r_i) - central difference| relative mismatch over seeded
// sample radii; used by tests and the field builders' audits.
double derivative_mismatch(const RadialProfile& u, double lo, double hi,
                           int n_points, unsigned long long seed);

}  // namespace hslab
