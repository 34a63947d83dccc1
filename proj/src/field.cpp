#include "hslab/field.hpp"

#include <cmath>
#include <string>

#include "hslab/rng.hpp"

namespace hslab {

AxisymField axisym_from_radial(const RadialProfile& u) {
    AxisymField f;
    auto v = u.value, dv = u.dvalue;
    f.value = [v](double r, double) { return v(r); };
    f.grad_rho = [dv](double r, double) { return dv(r); };
    f.grad_ang = [](double, double) { return 0.0; };
    f.support = u.support;
    f.rho_breakpoints = u.breakpoints;
    f.origin_exp_value = u.origin_exp_value;
    f.origin_exp_grad = u.origin_exp_dvalue;
    f.tail_exp_value = u.tail_exp_value;
    f.tail_exp_grad = u.tail_exp_dvalue;
    return f;
}

double field_gradient_mismatch(const AxisymField& f, double rho_lo, double rho_hi,
                               int n_points, unsigned long long seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_points; ++i) {
        double rho = rng.log_uniform(rho_lo, rho_hi);
        double th = rng.uniform(0.05, M_PI - 0.05);
        double hr = 1e-5 * rho, ht = 1e-5;
        double fd_r = (f.value(rho + hr, th) - f.value(rho - hr, th)) / (2.0 * hr);
        double fd_t = (f.value(rho, th + ht) - f.value(rho, th - ht)) / (2.0 * ht * rho);
        double an_r = f.grad_rho(rho, th);
        double an_t = f.grad_ang(rho, th);
        double scale = std::fabs(an_r) + std::fabs(an_t) +
                       std::fabs(f.value(rho, th)) / rho + 1e-280;
        worst = std::max(worst, std::fabs(fd_r - an_r) / scale);
        worst = std::max(worst, std::fabs(fd_t - an_t) / scale);
    }
    return worst;
}

namespace {

void audit_or_throw(const AxisymField& f, const char* name, double lo, double hi) {
    double miss = field_gradient_mismatch(f, lo, hi, 50, 0x5eedful);
    if (miss > 1e-5)
        throw Error(std::string(name) +
                    ": analytic gradient fails finite-difference audit, rel " +
                    std::to_string(miss));
}

}  // namespace

AxisymField diagonal_squeeze_field(const Params& P, double n) {
    if (n <= 0.0) throw Error("diagonal_squeeze_field: need n > 0");
    const double a = 1.0 + 1.0 / n;
    const double s = P.beta / P.pstar;
    RadialProfile U = extremal(P, 1.0);
    auto Uv = U.value, Ud = U.dvalue;

    auto g_of = [a](double th) {
        double c = std::cos(th);
        return std::sqrt(1.0 + (a * a - 1.0) * c * c);
    };
    auto dg_of = [a](double th, double g) {
        return -(a * a - 1.0) * std::sin(th) * std::cos(th) / g;
    };

    AxisymField f;
    f.value = [=](double rho, double th) {
        double g = g_of(th);
        return std::pow(g, -s) * Uv(rho * g);
    };
    f.grad_rho = [=](double rho, double th) {
        double g = g_of(th);
        return std::pow(g, 1.0 - s) * Ud(rho * g);
    };
    f.grad_ang = [=](double rho, double th) {
        double g = g_of(th);
        double dg = dg_of(th, g);
        return dg * (-s * std::pow(g, -s - 1.0) * Uv(rho * g) / rho +
                     std::pow(g, -s) * Ud(rho * g));
    };
    f.rho_breakpoints = {1.0};
    f.origin_exp_value = 0.0;
    f.origin_exp_grad = std::min(P.m - 1.0, -1.0);  // angular channel carries 1/rho
    f.tail_exp_value = U.tail_exp_value;
    f.tail_exp_grad = std::min(U.tail_exp_dvalue, U.tail_exp_value + 1.0);
    audit_or_throw(f, "diagonal_squeeze_field", 0.05, 20.0);
    return f;
}

AxisymField shifted_bump_field(const Params& P, double x0_norm, double eps) {
    if (x0_norm <= 2.0) throw Error("shifted_bump_field: need |x0| > 2");
    const double R = x0_norm;
    const double s = P.beta / P.pstar;
    RadialProfile U = extremal(P, 1.0);
    RadialProfile phi = bump_profile(0.0, 1.0);
    auto Uv = U.value, Ud = U.dvalue;
    auto Pv = phi.value, Pd = phi.dvalue;

    // h = |x0 + x| with theta measured from the x0 direction; the bump
    // support h < 1 sits around (rho, theta) = (R, pi).
    auto h_of = [R](double rho, double th) {
        return std::sqrt(R * R + rho * rho + 2.0 * R * rho * std::cos(th));
    };

    AxisymField f;
    f.value = [=](double rho, double th) {
        double base = Uv(rho);
        double h = h_of(rho, th);
        if (h >= 1.0) return base;
        return base + eps * std::pow(rho / h, s) * Pv(h);
    };
    f.grad_rho = [=](double rho, double th) {
        double base = Ud(rho);
        double h = h_of(rho, th);
        if (h >= 1.0) return base;
        double hr = (rho + R * std::cos(th)) / h;
        double pref = std::pow(rho / h, s);
        return base + eps * pref * ((s / rho - s * hr / h) * Pv(h) + Pd(h) * hr);
    };
    f.grad_ang = [=](double rho, double th) {
        double h = h_of(rho, th);
        if (h >= 1.0) return 0.0;
        double ht = -R * rho * std::sin(th) / h;
        double pref = std::pow(rho / h, s);
        return eps * pref * (ht / rho) * (Pd(h) - s * Pv(h) / h);
    };
    f.rho_breakpoints = {1.0, R - 1.0, R - 0.5, R, R + 0.5, R + 1.0};
    f.angular_feature = {{M_PI, 2.0 / R}};
    f.origin_exp_value = 0.0;
    f.origin_exp_grad = P.m - 1.0;
    f.tail_exp_value = U.tail_exp_value;
    f.tail_exp_grad = U.tail_exp_dvalue;
    audit_or_throw(f, "shifted_bump_field", 0.5 * R, 1.5 * R);
    // second audit pass aimed at the bump support itself
    if (eps != 0.0) {
        Rng rng(0xb0b5ULL);
        double worst = 0.0;
        for (int i = 0; i < 50; ++i) {
            double rho = R + rng.uniform(-0.85, 0.85);
            double th = M_PI - rng.uniform(1e-4, 0.9) / R;
            double hr = 1e-6 * rho, ht = 1e-7;
            double fd_r = (f.value(rho + hr, th) - f.value(rho - hr, th)) / (2.0 * hr);
            double fd_t = (f.value(rho, th + ht) - f.value(rho, th - ht)) / (2.0 * ht * rho);
            double scale = std::fabs(f.grad_rho(rho, th)) +
                           std::fabs(f.grad_ang(rho, th)) +
                           std::fabs(f.value(rho, th)) / rho + 1e-280;
            worst = std::max(worst, std::fabs(fd_r - f.grad_rho(rho, th)) / scale);
            worst = std::max(worst, std::fabs(fd_t - f.grad_ang(rho, th)) / scale);
        }
        if (worst > 1e-5)
            throw Error("shifted_bump_field: bump-region gradient audit failed, rel " +
                        std::to_string(worst));
    }
    return f;
}

}  // namespace hslab
