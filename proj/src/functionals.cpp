#include "hslab/functionals.hpp"

#include <cmath>
#include <mutex>

namespace hslab {

namespace {

QuadOptions profile_opts(const RadialProfile& u, double o_exp, double t_exp) {
    QuadOptions o;
    o.origin_exponent = o_exp;
    o.tail_exponent = t_exp;
    o.support_radius = u.support;
    o.breakpoints = u.breakpoints;
    return o;
}

}  // namespace

double grad_pnorm(const RadialProfile& u, const Params& P, double rel_tol) {
    const double p = P.p;
    auto f = [&u, p](double r) { return std::pow(std::fabs(u.dvalue(r)), p); };
    QuadOptions o = profile_opts(u, p * u.origin_exp_dvalue, p * u.tail_exp_dvalue);
    return radial_integral(f, 0.0, P, rel_tol, o);
}

double weighted_starnorm(const RadialProfile& u, const Params& P, double rel_tol) {
    const double ps = P.pstar;
    auto f = [&u, ps](double r) { return std::pow(std::fabs(u.value(r)), ps); };
    QuadOptions o = profile_opts(u, ps * u.origin_exp_value, ps * u.tail_exp_value);
    return radial_integral(f, P.beta, P, rel_tol, o);
}

namespace {

AxisymQuadOptions field_opts(const AxisymField& u, double o_exp, double t_exp) {
    AxisymQuadOptions o;
    o.radial.origin_exponent = o_exp;
    o.radial.tail_exponent = t_exp;
    o.radial.support_radius = u.support;
    o.radial.breakpoints = u.rho_breakpoints;
    o.angular_feature = u.angular_feature;
    return o;
}

}  // namespace

double grad_pnorm(const AxisymField& u, const Params& P, double rel_tol) {
    const double hp = 0.5 * P.p;
    auto f = [&u, hp](double rho, double th) {
        return std::pow(u.grad_sq(rho, th), hp);
    };
    AxisymQuadOptions o =
        field_opts(u, P.p * u.origin_exp_grad, P.p * u.tail_exp_grad);
    return axisym_integral(f, 0.0, P, rel_tol, o);
}

double weighted_starnorm(const AxisymField& u, const Params& P, double rel_tol) {
    const double ps = P.pstar;
    auto f = [&u, ps](double rho, double th) {
        return std::pow(std::fabs(u.value(rho, th)), ps);
    };
    AxisymQuadOptions o =
        field_opts(u, ps * u.origin_exp_value, ps * u.tail_exp_value);
    return axisym_integral(f, P.beta, P, rel_tol, o);
}

double sharp_constant(const Params& P) {
    std::lock_guard<std::mutex> lock(P.cache->mu);
    if (P.cache->sharp) return *P.cache->sharp;
    RadialProfile U = extremal(P, 1.0);
    double g = grad_pnorm(U, P, 1e-11);
    double s = std::pow(g, (P.pstar - P.p) / P.pstar);
    P.cache->sharp = s;
    return s;
}

namespace {

template <typename U>
DeficitReport deficit_impl(const U& u, const Params& P, double rel_tol) {
    DeficitReport rep;
    rep.sharp = sharp_constant(P);
    rep.grad_p = grad_pnorm(u, P, rel_tol);
    rep.star_int = weighted_starnorm(u, P, rel_tol);
    rep.star_p = std::pow(rep.star_int, P.p / P.pstar);
    rep.deficit = rep.grad_p - rep.sharp * rep.star_p;
    rep.quad_error = rel_tol * std::max(rep.grad_p, rep.sharp * rep.star_p);
    rep.proved_regime = P.proved_regime;
    return rep;
}

}  // namespace

DeficitReport deficit(const RadialProfile& u, const Params& P, double rel_tol) {
    return deficit_impl(u, P, rel_tol);
}

DeficitReport deficit(const AxisymField& u, const Params& P, double rel_tol) {
    return deficit_impl(u, P, rel_tol);
}

FormPair quadratic_form(const RadialProfile& v, int k, const Params& P,
                        double rel_tol) {
    RadialProfile U = extremal(P, 1.0);
    const double p = P.p, pm2 = P.p - 2.0;
    const double lam_k = static_cast<double>(k) * (P.N - 2.0 + k);
    const double D1 = (P.N - P.p) / (P.p - 1.0) + 1.0;  // decay power of U'
    auto Ud = U.dvalue;
    auto vv = v.value, vd = v.dvalue;

    auto f1 = [Ud, vd, pm2](double r) {
        double d = vd(r);
        return std::pow(std::fabs(Ud(r)), pm2) * d * d;
    };
    QuadOptions o1 = profile_opts(v, pm2 * (P.m - 1.0) + 2.0 * v.origin_exp_dvalue,
                                  pm2 * D1 + 2.0 * v.tail_exp_dvalue);
    o1.breakpoints.push_back(1.0);
    double I1 = radial_integral(f1, 0.0, P, rel_tol, o1);

    double I2 = 0.0;
    if (k > 0) {
        auto f2 = [Ud, vv, pm2](double r) {
            double w = vv(r);
            return std::pow(std::fabs(Ud(r)), pm2) * w * w;
        };
        QuadOptions o2 = profile_opts(v, pm2 * (P.m - 1.0) + 2.0 * v.origin_exp_value,
                                      pm2 * D1 + 2.0 * v.tail_exp_value);
        o2.breakpoints.push_back(1.0);
        I2 = radial_integral(f2, 2.0, P, rel_tol, o2);
    }

    auto Uv = U.value;
    const double ps2 = P.pstar - 2.0;
    auto fb = [Uv, vv, ps2](double r) {
        double w = vv(r);
        return std::pow(Uv(r), ps2) * w * w;
    };
    QuadOptions ob = profile_opts(v, 2.0 * v.origin_exp_value,
                                  ps2 * (P.N - P.p) / (P.p - 1.0) + 2.0 * v.tail_exp_value);
    ob.breakpoints.push_back(1.0);
    double B = radial_integral(fb, P.beta, P, rel_tol, ob);

    return {(p - 1.0) * I1 + lam_k * I2, B};
}

}  // namespace hslab
