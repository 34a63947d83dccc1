#include "hslab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hslab/errors.hpp"
#include "hslab/fitting.hpp"
#include "hslab/functionals.hpp"
#include "hslab/profile.hpp"
#include "hslab/quadrature.hpp"
#include "hslab/rng.hpp"
#include "hslab/spectral.hpp"

namespace hslab {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::array<double, 5> quantiles_of(std::vector<double> v) {
    std::array<double, 5> q{};
    if (v.empty()) return q;
    std::sort(v.begin(), v.end());
    auto at = [&](double frac) {
        double pos = frac * (v.size() - 1);
        size_t i = static_cast<size_t>(pos);
        double w = pos - i;
        return (i + 1 < v.size()) ? v[i] * (1.0 - w) + v[i + 1] * w : v[i];
    };
    return {v.front(), at(0.25), at(0.5), at(0.75), v.back()};
}

std::string fmt_num(double x) {
    std::ostringstream os;
    os << x;
    return os.str();
}

}  // namespace

IneqReport check_vector_expansion(double p, double kappa, long n,
                                  std::uint64_t seed) {
    if (!(p > 1.0)) throw DomainError("vector expansion: need p > 1");
    if (!(kappa > 0.0 && kappa < 1.0))
        throw DomainError("vector expansion: kappa must lie in (0,1)");
    Rng rng(seed);
    IneqReport rep;
    rep.name = "vector-expansion[p=" + fmt_num(p) + "]";
    rep.samples = n;
    long side_viol = 0;
    std::vector<double> ratios;
    ratios.reserve(n);
    double worst = 1e300;
    for (long i = 0; i < n; ++i) {
        double t = rng.log_uniform(1e-6, 1e6);
        double th = rng.uniform(0.0, kPi);
        double c = std::cos(th);
        double q = t * (2.0 * c + t);  // |x+y|^2 - 1 at |x| = 1
        double spl, excess_lin, dm;    // |x+y|, |x+y|^p - 1 - p x.y, 1 - |x+y|
        if (std::fabs(q) < 0.5) {
            excess_lin = std::expm1(0.5 * p * std::log1p(q)) - p * t * c;
            dm = -std::expm1(0.5 * std::log1p(q));
            spl = 1.0 - dm;
        } else {
            spl = std::sqrt(1.0 + q);
            excess_lin = std::pow(spl, p) - 1.0 - p * t * c;
            dm = 1.0 - spl;
        }
        double omega;  // |omega|^{p-2} at |x| = 1
        if (p < 2.0)
            omega = (spl > 1.0) ? spl / ((2.0 - p) * spl + (p - 1.0)) : 1.0;
        else
            omega = (spl > 1.0) ? 1.0 : std::pow(spl, p - 1.0);
        double hess = p * t * t + p * (p - 2.0) * omega * dm * dm;
        double excess = excess_lin - 0.5 * (1.0 - kappa) * hess;
        double denom = (p < 2.0)
                           ? std::min(std::pow(t, p), t * t)
                           : std::pow(t, p);
        double ratio = excess / denom;
        ratios.push_back(ratio);
        worst = std::min(worst, ratio);
        if (ratio < -1e-10) ++rep.violations;
        if (p < 2.0 && t * t + (p - 2.0) * omega * dm * dm < -1e-12 * t * t)
            ++side_viol;
    }
    rep.violations += side_viol;
    rep.estimated_constant = worst;
    rep.worst_margin = worst;
    rep.quantiles = quantiles_of(std::move(ratios));
    rep.passed = rep.violations == 0 && rep.estimated_constant > 0.0;
    rep.details.push_back({"kappa", kappa});
    rep.details.push_back({"sign_condition_violations",
                           static_cast<double>(side_viol)});
    if (std::fabs(p - 2.0) < 1e-14)
        rep.note = "at p = 2 the remainder constant equals kappa exactly";
    return rep;
}

IneqReport check_scalar_expansion(const Params& P, double kappa, long n,
                                  std::uint64_t seed) {
    if (!(kappa > 0.0 && kappa < 1.0))
        throw DomainError("scalar expansion: kappa must lie in (0,1)");
    const double ps = P.pstar;
    const bool sub = ps <= 2.0;
    const double coeff = 0.5 * ps * (ps - 1.0) + kappa;
    const double cap = 1e8;
    Rng rng(seed);
    IneqReport rep;
    rep.name = sub ? "scalar-expansion[pstar<=2]" : "scalar-expansion[pstar>2]";
    rep.samples = n;
    std::vector<double> consts;
    consts.reserve(n);
    double best = 0.0;
    for (long i = 0; i < n; ++i) {
        double t = rng.log_uniform(1e-6, 1e6);
        double b = rng.sign() * t;
        double E;  // |1+b|^{ps} - 1 - ps b
        if (std::fabs(b) < 0.5)
            E = std::expm1(ps * std::log1p(b)) - ps * b;
        else
            E = std::pow(std::fabs(1.0 + b), ps) - 1.0 - ps * b;
        double c2;
        if (sub) {
            double W = E * (1.0 + b * b) / (coeff * b * b);
            c2 = (W <= 1.0) ? 0.0
                            : (std::pow(W, 1.0 / ps) - 1.0) / std::fabs(b);
        } else {
            c2 = std::max(0.0, (E - coeff * b * b) /
                                   std::pow(std::fabs(b), ps));
        }
        consts.push_back(c2);
        best = std::max(best, c2);
        if (!(c2 < cap)) ++rep.violations;
    }
    rep.estimated_constant = best;
    rep.worst_margin = cap - best;
    rep.quantiles = quantiles_of(std::move(consts));
    rep.passed = rep.violations == 0 && std::isfinite(best);
    rep.details.push_back({"kappa", kappa});
    rep.details.push_back({"pstar", ps});
    return rep;
}

namespace {

RadialProfile envelope_power(const Params& P, double expo) {
    // (1 + r^m)^{-expo}
    RadialProfile w;
    double m = P.m;
    w.value = [m, expo](double r) {
        return std::pow(1.0 + std::pow(r, m), -expo);
    };
    w.dvalue = [m, expo](double r) {
        return -expo * m * std::pow(r, m - 1.0) *
               std::pow(1.0 + std::pow(r, m), -expo - 1.0);
    };
    w.origin_exp_value = 0.0;
    w.origin_exp_dvalue = m - 1.0;
    w.tail_exp_value = m * expo;
    w.tail_exp_dvalue = m * expo + 1.0;
    return w;
}

RadialProfile seeded_train(Rng& rng, bool nonneg) {
    int parts = 3 + static_cast<int>(rng.uniform() * 3.0);
    std::vector<double> coeff;
    std::vector<RadialProfile> bumps;
    for (int j = 0; j < parts; ++j) {
        double center = rng.log_uniform(0.05, 30.0);
        double width = center * rng.uniform(0.3, 0.9);
        coeff.push_back(nonneg ? rng.uniform(0.2, 1.0)
                               : rng.uniform(-1.0, 1.0));
        bumps.push_back(bump_profile(center, width));
    }
    return lincomb(coeff, bumps);
}

double family_integral(const RadialProfile& w,
                       const std::function<double(double)>& f,
                       double origin_exp, double weight, const Params& P,
                       double rel_tol) {
    if (!w.support)
        throw DomainError("hardy family member must be compactly supported");
    QuadOptions opts;
    opts.origin_exponent = origin_exp;
    opts.support_radius = w.support;
    opts.breakpoints = w.breakpoints;
    opts.max_rounds = 9;
    return radial_integral(f, weight, P, rel_tol, opts);
}

}  // namespace

IneqReport check_hardy_weighted(const Params& P, double xi, int family_size) {
    if (!(xi >= 1.0)) throw DomainError("weighted hardy: need xi >= 1");
    const double p = P.p, m = P.m, beta = P.beta;
    const double cbar =
        (xi > 1.0)
            ? (P.N - beta) *
                  std::pow((xi - 1.0) * (p - beta) / (p - 1.0), p - 1.0)
            : std::pow((P.N - beta) / p, p);

    std::vector<RadialProfile> family;
    Rng rng(derive_seed(0xbadd00d5cafeULL,
                        static_cast<std::uint64_t>(xi * 4096.0)));
    while (static_cast<int>(family.size()) < std::max(4, family_size - 9))
        family.push_back(seeded_train(rng, false));
    // The bound binds at large r, where both sides carry the same effective
    // weight: slow tails just inside integrability probe the constant, and
    // the equality-shaped envelope (non-integrable, so cut off) does too.
    auto add_tail = [&](double expo, double R) {
        RadialProfile w = product_profile(envelope_power(P, expo),
                                          cutoff_profile(0.5 * R, R));
        w.origin_exp_value = 0.0;
        w.origin_exp_dvalue = m - 1.0;
        family.push_back(std::move(w));
    };
    const double sigma_min =
        (P.N - beta + (p - beta) * (xi - 1.0)) / p;
    for (double fac : {1.05, 1.2, 1.5})
        add_tail(fac * sigma_min / m, 1e6);
    if (xi > 1.0)
        for (double R : {10.0, 100.0, 1000.0})
            add_tail((p - 1.0) * (xi - 1.0), R);

    IneqReport rep;
    rep.name = "weighted-hardy[xi=" + fmt_num(xi) + "]";
    rep.samples = static_cast<long>(family.size());
    std::vector<double> ratios;
    double worst = 1e300;
    for (const auto& w : family) {
        auto lhs_f = [&](double r) {
            return std::pow(std::fabs(w.value(r)), p) *
                   std::pow(1.0 + std::pow(r, m), (p - 1.0) * (xi - 1.0));
        };
        auto rhs_f = [&](double r) {
            return std::pow(std::fabs(w.dvalue(r)), p) *
                   std::pow(1.0 + std::pow(r, m), (p - 1.0) * xi);
        };
        double lhs = family_integral(w, lhs_f, p * w.origin_exp_value, beta,
                                     P, 1e-8);
        double rhs = family_integral(w, rhs_f, p * w.origin_exp_dvalue, 0.0,
                                     P, 1e-8);
        double ratio = rhs / lhs;
        ratios.push_back(ratio);
        worst = std::min(worst, ratio);
        if (ratio < cbar * (1.0 - 1e-6)) ++rep.violations;
    }
    rep.estimated_constant = worst;
    rep.worst_margin = worst - cbar;
    rep.quantiles = quantiles_of(std::move(ratios));
    rep.passed = rep.violations == 0;
    rep.details.push_back({"claimed_constant", cbar});
    rep.details.push_back({"xi", xi});
    return rep;
}

IneqReport check_pointwise_envelope(const Params& P, double eps0, long n,
                                    std::uint64_t seed) {
    const double N = P.N, p = P.p, beta = P.beta, m = P.m;
    if (p > 2.0 * N / (N + 2.0 - beta) + 1e-12)
        throw RegimeError("pointwise envelope: needs p <= 2N/(N+2-beta)");
    if (!(eps0 > 0.0 && eps0 < 1.0))
        throw DomainError("pointwise envelope: eps0 must lie in (0,1)");
    const double du = (N - p) / (p - beta);  // U-decay exponent in (1+r^m)
    const double ps = P.pstar;
    const double zeta = std::pow(eps0 / 3.0, 1.0 / p);
    const double cap = 1e12;

    Rng rng(seed);
    IneqReport rep;
    rep.name = "pointwise-envelope";
    rep.samples = n;
    std::vector<double> consts;
    consts.reserve(n);
    double best_damped = 0.0, best_plain = 0.0;
    double strata[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    for (long i = 0; i < n; ++i) {
        double r = rng.log_uniform(1e-6, 1e6);
        double b = rng.log_uniform(1e-6, 1e6);
        double eps = rng.uniform(1e-9, 1.0);
        double f = rng.log_uniform(1e-6, 1.0);
        double om = 1.0 + std::pow(r, m);
        double a = f * zeta * std::pow(om, -du) / eps;

        double lhs =
            std::pow(om, -du * (ps - 2.0) + p - 1.0) *
            (a * a * std::pow(zeta, p) *
                 std::pow(r, p * (1.0 - beta) / (p - 1.0)) *
                 std::pow(om, -p) +
             a * a * std::pow(eps, p) * std::pow(b, p) * std::pow(om, du * p) +
             std::pow(a, 2.0 - p) * std::pow(b, p));
        double absorb = eps0 * std::pow(r, -beta) *
                        std::pow(om, -du * (ps - 2.0)) * a * a;
        double env = std::pow(std::pow(om, -(N - beta) / (p - beta)) *
                                      std::pow(r, (1.0 - beta) / (p - 1.0)) +
                                  eps * b,
                              p - 2.0) *
                     b * b;
        double need = std::max(0.0, (lhs - absorb) / env);
        double c_damped = need * std::pow(1.0 + r, m);
        consts.push_back(c_damped);
        best_damped = std::max(best_damped, c_damped);
        best_plain = std::max(best_plain, need);
        strata[r > 1.0][b > 1.0] =
            std::max(strata[r > 1.0][b > 1.0], c_damped);
        if (!(c_damped < cap)) ++rep.violations;
    }
    rep.estimated_constant = best_damped;
    rep.worst_margin = cap - best_damped;
    rep.quantiles = quantiles_of(std::move(consts));
    rep.passed = rep.violations == 0 && std::isfinite(best_damped);
    rep.details.push_back({"eps0", eps0});
    rep.details.push_back({"undamped_constant", best_plain});
    rep.details.push_back({"max_r_small_b_small", strata[0][0]});
    rep.details.push_back({"max_r_small_b_large", strata[0][1]});
    rep.details.push_back({"max_r_large_b_small", strata[1][0]});
    rep.details.push_back({"max_r_large_b_large", strata[1][1]});
    rep.note = "constant shown includes the (1+r)^{-m} damping; the undamped "
               "variant's constant is in details";
    return rep;
}

IneqReport check_local_poincare(const Params& P,
                                const std::vector<double>& rho_list,
                                int family_size) {
    if (rho_list.size() < 2)
        throw DomainError("local poincare: need at least two radii");
    IneqReport rep;
    rep.name = "local-poincare";

    std::vector<RadialProfile> family;
    for (auto [c, w] : {std::pair{0.3, 0.1}, {1.0, 0.3}, {3.0, 1.0},
                        {10.0, 3.0}})
        family.push_back(bump_profile(c, w));
    for (double lam : {0.5, 1.0, 2.0}) family.push_back(extremal(P, lam));
    family.push_back(tangent_basis(P, 1.0).second);
    Rng rng(0x10c41ULL);
    while (static_cast<int>(family.size()) < std::max(8, family_size))
        family.push_back(seeded_train(rng, false));

    std::vector<double> ratios;
    double global_min = 1e300;
    for (const auto& v : family) {
        FormPair f = quadratic_form(v, 0, P);
        double ratio = f.A / ((P.p - 1.0) * f.B);
        ratios.push_back(ratio);
        global_min = std::min(global_min, ratio);
    }
    bool ok_global = global_min > 1e-12;

    std::vector<double> tb, tt, logw;
    for (double rho : rho_list) {
        tb.push_back(sup_mass_over_energy(P, 0.0, rho));
        tt.push_back(sup_mass_over_energy(P, 1.0 / rho, 1e30));
        logw.push_back(std::fabs(std::log(rho)));
    }
    FitResult ball_fit = loglog_fit(rho_list, tb);
    FitResult tail_fit = loglog_fit(logw, tt);
    double c_tail = 1e300;
    bool tail_mono = true;
    for (size_t i = 0; i < rho_list.size(); ++i) {
        c_tail = std::min(c_tail, 1.0 / (tt[i] * logw[i] * logw[i]));
        if (i > 0 && rho_list[i] < rho_list[i - 1] &&
            tt[i] > 1.05 * tt[i - 1])
            tail_mono = false;
    }
    bool ok_ball = ball_fit.slope > 0.2 && std::isfinite(ball_fit.slope);
    bool ok_tail = c_tail > 0.0 && tail_mono;

    rep.samples = static_cast<long>(family.size() + 2 * rho_list.size());
    rep.estimated_constant = global_min;
    rep.worst_margin = global_min;
    rep.quantiles = quantiles_of(std::move(ratios));
    rep.passed = ok_global && ok_ball && ok_tail;
    rep.details.push_back({"ball_exponent_fit", ball_fit.slope});
    rep.details.push_back({"tail_log_exponent_fit", tail_fit.slope});
    rep.details.push_back({"tail_constant", c_tail});
    for (size_t i = 0; i < rho_list.size(); ++i) {
        rep.details.push_back(
            {"ball_quotient[rho=" + fmt_num(rho_list[i]) + "]", tb[i]});
        rep.details.push_back(
            {"tail_quotient[rho=" + fmt_num(rho_list[i]) + "]", tt[i]});
    }
    rep.note = "ball and tail quotients shrink like a power of the radius; "
               "the log-square tail bound holds with room to spare";
    return rep;
}

namespace {

struct OrliczMember {
    RadialProfile v;
    bool sign_changing;
};

double orlicz_energy(const Params& P, const RadialProfile& U,
                     const OrliczMember& mem, double eps, double t) {
    const auto& v = mem.v;
    QuadOptions opts;
    double odv = v.origin_exp_dvalue;
    double umin = std::min(P.m - 1.0, 0.0);
    opts.origin_exponent = (P.p - 2.0) * std::min(umin, odv) + 2.0 * odv;
    if (v.support) {
        opts.support_radius = v.support;
    } else {
        double d1 = (P.N - P.p) / (P.p - 1.0) + 1.0;
        double tdv = v.tail_exp_dvalue;
        opts.tail_exponent = std::min((P.p - 2.0) * d1 + 2.0 * tdv,
                                      P.p * std::min(d1, tdv));
    }
    opts.breakpoints = v.breakpoints;
    opts.breakpoints.push_back(1.0);
    opts.max_rounds = 9;
    auto f = [&](double r) {
        double g = std::fabs(v.dvalue(r));
        return std::pow(std::fabs(U.dvalue(r)) + eps * t * g, P.p - 2.0) *
               t * t * g * g;
    };
    return radial_integral(f, 0.0, P, 1e-8, opts);
}

double orlicz_mass(const Params& P, const RadialProfile& U,
                   const OrliczMember& mem, double eps, double t) {
    const auto& v = mem.v;
    QuadOptions opts;
    opts.origin_exponent = 2.0 * v.origin_exp_value;
    if (v.support) {
        opts.support_radius = v.support;
    } else {
        double d0 = (P.N - P.p) / (P.p - 1.0);
        opts.tail_exponent = (P.pstar - 2.0) * d0 + 2.0 * v.tail_exp_value;
    }
    opts.breakpoints = v.breakpoints;
    opts.breakpoints.push_back(1.0);
    opts.max_rounds = 9;
    auto f = [&](double r) {
        double w = v.value(r);
        return std::pow(U.value(r) + eps * t * w, P.pstar - 2.0) * t * t * w *
               w;
    };
    return radial_integral(f, P.beta, P, 1e-8, opts);
}

bool positivity_ok(const RadialProfile& U, const RadialProfile& v, double eps,
                   double t) {
    for (int i = 0; i <= 160; ++i) {
        double r = std::pow(10.0, -4.0 + 8.0 * i / 160.0);
        if (U.value(r) + eps * t * v.value(r) < 0.01 * U.value(r))
            return false;
    }
    return true;
}

}  // namespace

IneqReport check_orlicz_quotient(const Params& P,
                                 const std::vector<double>& eps_list,
                                 int family_size) {
    const double N = P.N, p = P.p, beta = P.beta;
    if (p > 2.0 * N / (N + 2.0 - beta) + 1e-12)
        throw RegimeError("orlicz quotient: needs p <= 2N/(N+2-beta)");
    if (!(beta > 0.0)) throw RegimeError("orlicz quotient: needs beta > 0");
    if (eps_list.size() < 2)
        throw DomainError("orlicz quotient: need at least two eps values");

    RadialProfile U = extremal(P, 1.0);
    std::vector<OrliczMember> family;
    for (auto [c, w] : {std::pair{0.3, 0.2}, {1.0, 0.2}, {3.0, 0.2},
                        {0.3, 1.0}, {1.0, 1.0}, {3.0, 1.0}})
        family.push_back({bump_profile(c, w), false});
    family.push_back({extremal(P, 0.5), false});
    family.push_back({extremal(P, 2.0), false});
    family.push_back({tangent_basis(P, 1.0).second, true});
    family.push_back({bump_profile(1.0, 0.5, -1.0), true});
    family.push_back({bump_profile(3.0, 1.0, -1.0), true});
    Rng rng(0x0421ceULL);
    while (static_cast<int>(family.size()) < std::max(12, family_size))
        family.push_back({seeded_train(rng, true), false});

    IneqReport rep;
    rep.name = "orlicz-quotient";
    std::vector<double> masses;
    long skipped = 0;
    double best = 0.0, per_eps_min = 1e300, per_eps_max = 0.0;
    for (double eps : eps_list) {
        double eps_best = 0.0;
        for (const auto& mem : family) {
            // Normalize the energy to 1; it is strictly increasing in t.
            double t_hi = 1.0;
            int guard = 0;
            while (orlicz_energy(P, U, mem, eps, t_hi) < 1.0 && ++guard < 60)
                t_hi *= 2.0;
            double t_lo = 0.5 * t_hi;
            guard = 0;
            while (orlicz_energy(P, U, mem, eps, t_lo) > 1.0 && ++guard < 80)
                t_lo *= 0.5;
            for (int it = 0; it < 60; ++it) {
                double mid = 0.5 * (t_lo + t_hi);
                if (orlicz_energy(P, U, mem, eps, mid) < 1.0)
                    t_lo = mid;
                else
                    t_hi = mid;
            }
            double t = 0.5 * (t_lo + t_hi);
            if (mem.sign_changing && !positivity_ok(U, mem.v, eps, t)) {
                ++skipped;
                continue;
            }
            double mass = orlicz_mass(P, U, mem, eps, t);
            masses.push_back(mass);
            eps_best = std::max(eps_best, mass);
            if (!std::isfinite(mass)) ++rep.violations;
        }
        best = std::max(best, eps_best);
        per_eps_min = std::min(per_eps_min, eps_best);
        per_eps_max = std::max(per_eps_max, eps_best);
        rep.details.push_back(
            {"sup_mass[eps=" + fmt_num(eps) + "]", eps_best});
    }
    rep.samples = static_cast<long>(masses.size());
    rep.estimated_constant = best;
    rep.worst_margin = best;
    rep.quantiles = quantiles_of(std::move(masses));
    rep.passed = rep.violations == 0 && std::isfinite(best) && best > 0.0;
    rep.details.push_back({"spread", (per_eps_max - per_eps_min) /
                                         std::max(per_eps_min, 1e-300)});
    rep.details.push_back({"skipped_members", static_cast<double>(skipped)});
    if (skipped > 0)
        rep.note = "sign-changing members whose normalized amplitude breaks "
                   "positivity of U + eps t v are skipped";
    return rep;
}

std::vector<IneqReport> run_suite(const std::string& suite, long samples,
                                  std::uint64_t seed,
                                  const Params* override_params) {
    std::vector<IneqReport> out;
    auto guard = [&](const std::string& name, auto&& fn) {
        try {
            fn();
        } catch (const RegimeError& e) {
            IneqReport skip;
            skip.name = name;
            skip.passed = true;
            skip.note = std::string("skipped: ") + e.what();
            out.push_back(std::move(skip));
        }
    };
    const bool all = suite == "all";
    bool known = all;

    if (all || suite == "vector") {
        known = true;
        if (override_params) {
            guard("vector-expansion", [&] {
                out.push_back(check_vector_expansion(
                    override_params->p, 0.5, samples, derive_seed(seed, 1)));
            });
        } else {
            out.push_back(
                check_vector_expansion(1.5, 0.5, samples, derive_seed(seed, 1)));
            out.push_back(
                check_vector_expansion(2.5, 0.5, samples, derive_seed(seed, 2)));
        }
    }
    if (all || suite == "scalar") {
        known = true;
        if (override_params) {
            guard("scalar-expansion", [&] {
                out.push_back(check_scalar_expansion(
                    *override_params, 0.5, samples, derive_seed(seed, 3)));
            });
        } else {
            out.push_back(check_scalar_expansion(make_params(4, 1.3, 0.5), 0.5,
                                                 samples, derive_seed(seed, 3)));
            out.push_back(check_scalar_expansion(make_params(5, 2.0, 1.0), 0.5,
                                                 samples, derive_seed(seed, 4)));
        }
    }
    if (all || suite == "hardy") {
        known = true;
        Params P = override_params ? *override_params : make_params(5, 2.0, 1.0);
        for (double xi : {1.5, 2.0, 3.0})
            guard("weighted-hardy[xi=" + fmt_num(xi) + "]",
                  [&] { out.push_back(check_hardy_weighted(P, xi, 12)); });
    }
    if (all || suite == "pointwise") {
        known = true;
        Params P =
            override_params ? *override_params : make_params(4, 1.3, 0.5);
        guard("pointwise-envelope", [&] {
            out.push_back(
                check_pointwise_envelope(P, 0.3, samples, derive_seed(seed, 5)));
        });
    }
    if (all || suite == "local") {
        known = true;
        Params P =
            override_params ? *override_params : make_params(5, 2.0, 1.1);
        guard("local-poincare", [&] {
            out.push_back(
                check_local_poincare(P, {0.2, 0.1, 0.05, 0.025}, 12));
        });
    }
    if (all || suite == "orlicz") {
        known = true;
        Params P =
            override_params ? *override_params : make_params(4, 1.3, 0.5);
        guard("orlicz-quotient", [&] {
            out.push_back(check_orlicz_quotient(P, {0.2, 0.1, 0.05}, 12));
        });
    }
    if (!known) throw DomainError("unknown suite: " + suite);
    return out;
}

}  // namespace hslab
