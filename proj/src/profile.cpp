#include "hslab/profile.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hslab/rng.hpp"

namespace hslab {

namespace {

double bump_fn(double u) {
    double w = 1.0 - u * u;
    return w > 0.0 ? std::exp(-1.0 / w) : 0.0;
}

double bump_dfn(double u) {
    double w = 1.0 - u * u;
    if (w <= 0.0) return 0.0;
    return bump_fn(u) * (-2.0 * u / (w * w));
}

double ramp(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
double dramp(double x) { return x > 0.0 ? ramp(x) / (x * x) : 0.0; }

// C^inf step: 0 at x<=0, 1 at x>=1.
double sstep(double x) {
    double g = ramp(x), h = ramp(1.0 - x);
    return g / (g + h);
}

double dsstep(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    double g = ramp(x), h = ramp(1.0 - x);
    double dg = dramp(x), dh = dramp(1.0 - x);
    double denom = (g + h) * (g + h);
    return (dg * h + g * dh) / denom;
}

}  // namespace

RadialProfile extremal(const Params& P, double lambda) {
    const double A = P.Cnpb * std::pow(lambda, P.a_scale);
    const double dA = P.cnp * std::pow(lambda, P.a_scale + 1.0);
    const double m = P.m, bexp = P.b_exp, cexp = (P.N - P.beta) / (P.p - P.beta);
    RadialProfile u;
    u.value = [=](double r) {
        double s = lambda * r;
        return A * std::pow(1.0 + std::pow(s, m), -bexp);
    };
    u.dvalue = [=](double r) {
        if (r == 0.0) {
            if (m > 1.0) return 0.0;
            if (m == 1.0) return -dA;
            return -std::numeric_limits<double>::infinity();
        }
        double s = lambda * r;
        return -dA * std::pow(s, m - 1.0) * std::pow(1.0 + std::pow(s, m), -cexp);
    };
    u.origin_exp_value = 0.0;
    u.origin_exp_dvalue = m - 1.0;
    u.tail_exp_value = (P.N - P.p) / (P.p - 1.0);
    u.tail_exp_dvalue = u.tail_exp_value + 1.0;
    u.breakpoints = {1.0 / lambda};
    return u;
}

std::pair<RadialProfile, RadialProfile> tangent_basis(const Params& P, double lambda) {
    const double kz = P.Cnpb * (P.N - P.p) / (P.p * (P.p - 1.0));
    const double m = P.m, cexp = (P.N - P.beta) / (P.p - P.beta), pm1 = P.p - 1.0;
    const double A = kz * std::pow(lambda, P.a_scale - 1.0);
    const double dA = kz * m * std::pow(lambda, P.a_scale);
    RadialProfile z;
    z.value = [=](double r) {
        double sm = std::pow(lambda * r, m);
        return A * (pm1 - sm) * std::pow(1.0 + sm, -cexp);
    };
    z.dvalue = [=](double r) {
        if (r == 0.0) {
            if (m > 1.0) return 0.0;
            if (m == 1.0) return -dA * (1.0 + cexp * pm1);
            return -std::numeric_limits<double>::infinity();
        }
        double s = lambda * r;
        double sm = std::pow(s, m);
        return -dA * std::pow(s, m - 1.0) * std::pow(1.0 + sm, -cexp - 1.0) *
               ((1.0 + sm) + cexp * (pm1 - sm));
    };
    z.origin_exp_value = 0.0;
    z.origin_exp_dvalue = m - 1.0;
    z.tail_exp_value = (P.N - P.p) / (P.p - 1.0);
    z.tail_exp_dvalue = z.tail_exp_value + 1.0;
    // sign change of Z_lambda, useful as a quadrature breakpoint
    z.breakpoints = {std::pow(pm1, 1.0 / m) / lambda};
    return {extremal(P, lambda), z};
}

RadialProfile bump_profile(double center, double width, double amplitude) {
    RadialProfile b;
    b.value = [=](double r) { return amplitude * bump_fn((r - center) / width); };
    b.dvalue = [=](double r) { return amplitude / width * bump_dfn((r - center) / width); };
    b.support = center + width;
    b.breakpoints = {std::max(0.0, center - width), center, center + width};
    return b;
}

RadialProfile cutoff_profile(double inner, double outer) {
    const double L = outer - inner;
    RadialProfile c;
    c.value = [=](double r) { return 1.0 - sstep((r - inner) / L); };
    c.dvalue = [=](double r) { return -dsstep((r - inner) / L) / L; };
    c.support = outer;
    c.breakpoints = {inner, outer};
    return c;
}

RadialProfile truncated_power(double gamma, double outer) {
    RadialProfile cut = cutoff_profile(0.5 * outer, outer);
    RadialProfile t;
    t.value = [=](double r) { return std::pow(r, gamma) * cut.value(r); };
    t.dvalue = [=](double r) {
        double pw = (gamma == 0.0) ? 0.0 : gamma * std::pow(r, gamma - 1.0);
        return pw * cut.value(r) + std::pow(r, gamma) * cut.dvalue(r);
    };
    t.support = outer;
    t.origin_exp_value = gamma;
    t.origin_exp_dvalue = gamma - 1.0;
    t.breakpoints = cut.breakpoints;
    return t;
}

RadialProfile scale_profile(double c, const RadialProfile& u) {
    return lincomb({c}, {u});
}

RadialProfile lincomb(const std::vector<double>& coeff,
                      const std::vector<RadialProfile>& parts) {
    if (coeff.size() != parts.size() || parts.empty())
        throw Error("lincomb: size mismatch");
    RadialProfile out;
    auto cs = coeff;
    auto ps = parts;
    out.value = [cs, ps](double r) {
        double s = 0.0;
        for (size_t i = 0; i < ps.size(); ++i) s += cs[i] * ps[i].value(r);
        return s;
    };
    out.dvalue = [cs, ps](double r) {
        double s = 0.0;
        for (size_t i = 0; i < ps.size(); ++i) s += cs[i] * ps[i].dvalue(r);
        return s;
    };
    bool compact = true;
    double sup = 0.0;
    out.origin_exp_value = parts[0].origin_exp_value;
    out.origin_exp_dvalue = parts[0].origin_exp_dvalue;
    out.tail_exp_value = parts[0].tail_exp_value;
    out.tail_exp_dvalue = parts[0].tail_exp_dvalue;
    for (const auto& pr : parts) {
        if (pr.support)
            sup = std::max(sup, *pr.support);
        else
            compact = false;
        out.origin_exp_value = std::min(out.origin_exp_value, pr.origin_exp_value);
        out.origin_exp_dvalue = std::min(out.origin_exp_dvalue, pr.origin_exp_dvalue);
        out.tail_exp_value = std::min(out.tail_exp_value, pr.tail_exp_value);
        out.tail_exp_dvalue = std::min(out.tail_exp_dvalue, pr.tail_exp_dvalue);
        out.breakpoints.insert(out.breakpoints.end(), pr.breakpoints.begin(),
                               pr.breakpoints.end());
    }
    if (compact) out.support = sup;
    return out;
}

RadialProfile product_profile(const RadialProfile& a, const RadialProfile& b) {
    RadialProfile out;
    auto av = a.value, ad = a.dvalue, bv = b.value, bd = b.dvalue;
    out.value = [av, bv](double r) { return av(r) * bv(r); };
    out.dvalue = [av, ad, bv, bd](double r) {
        return ad(r) * bv(r) + av(r) * bd(r);
    };
    if (a.support || b.support) {
        double s = std::numeric_limits<double>::infinity();
        if (a.support) s = std::min(s, *a.support);
        if (b.support) s = std::min(s, *b.support);
        out.support = s;
    }
    out.origin_exp_value = a.origin_exp_value + b.origin_exp_value;
    out.origin_exp_dvalue = std::min(a.origin_exp_dvalue + b.origin_exp_value,
                                     a.origin_exp_value + b.origin_exp_dvalue);
    out.tail_exp_value = a.tail_exp_value + b.tail_exp_value;
    out.tail_exp_dvalue = std::min(a.tail_exp_dvalue + b.tail_exp_value,
                                   a.tail_exp_value + b.tail_exp_dvalue);
    out.breakpoints = a.breakpoints;
    out.breakpoints.insert(out.breakpoints.end(), b.breakpoints.begin(),
                           b.breakpoints.end());
    return out;
}

double derivative_mismatch(const RadialProfile& u, double lo, double hi,
                           int n_points, unsigned long long seed) {
    Rng rng(seed);
    double worst = 0.0;
    for (int i = 0; i < n_points; ++i) {
        double r = rng.log_uniform(lo, hi);
        double h = 1e-5 * r;
        double fd = (u.value(r + h) - u.value(r - h)) / (2.0 * h);
        double an = u.dvalue(r);
        if (!std::isfinite(an)) continue;
        double scale = std::fabs(an) + std::fabs(u.value(r)) / r + 1e-280;
        worst = std::max(worst, std::fabs(fd - an) / scale);
    }
    return worst;
}

}  // namespace hslab
