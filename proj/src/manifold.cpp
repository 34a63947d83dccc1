#include "hslab/manifold.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hslab/errors.hpp"
#include "hslab/functionals.hpp"
#include "hslab/nelder_mead.hpp"
#include "hslab/quadrature.hpp"

namespace hslab {

namespace {

// Flattened sample set: weight, radius, and the two gradient channels of u
// (angular channel identically zero for radial inputs).
struct SampleSet {
    std::vector<double> w, r, gr, ga;
};

SampleSet radial_samples(const RadialProfile& u, const Params& P,
                         const DistanceOptions& opts) {
    QuadOptions q;
    q.origin_exponent =
        P.p * std::min({u.origin_exp_dvalue, P.m - 1.0, 0.0});
    q.tail_exponent = P.p * std::min(u.tail_exp_dvalue, (P.N - P.p) / (P.p - 1.0) + 1.0);
    q.breakpoints = u.breakpoints;
    q.breakpoints.push_back(1.0);
    RadialRule rule = make_radial_rule(P, q, opts.extra_rounds);
    SampleSet s;
    s.w = rule.w;
    s.r = rule.r;
    s.gr.resize(rule.r.size());
    s.ga.assign(rule.r.size(), 0.0);
    for (size_t i = 0; i < rule.r.size(); ++i) s.gr[i] = u.dvalue(rule.r[i]);
    return s;
}

SampleSet axisym_samples(const AxisymField& u, const Params& P,
                         const DistanceOptions& opts) {
    AxisymQuadOptions q;
    q.radial.origin_exponent =
        P.p * std::min({u.origin_exp_grad, P.m - 1.0, 0.0});
    q.radial.tail_exponent =
        P.p * std::min(u.tail_exp_grad, (P.N - P.p) / (P.p - 1.0) + 1.0);
    q.radial.breakpoints = u.rho_breakpoints;
    q.radial.breakpoints.push_back(1.0);
    q.angular_feature = u.angular_feature;
    AxisymRule rule = make_axisym_rule(P, q, opts.extra_rounds);
    SampleSet s;
    size_t n = rule.rho.size() * rule.theta.size();
    s.w.reserve(n);
    s.r.reserve(n);
    s.gr.reserve(n);
    s.ga.reserve(n);
    for (size_t i = 0; i < rule.rho.size(); ++i) {
        double rho = rule.rho[i];
        for (size_t j = 0; j < rule.theta.size(); ++j) {
            s.w.push_back(rule.wr[i] * rule.wt[j]);
            s.r.push_back(rho);
            s.gr.push_back(u.grad_rho(rho, rule.theta[j]));
            s.ga.push_back(u.grad_ang(rho, rule.theta[j]));
        }
    }
    return s;
}

struct Objective {
    const SampleSet& s;
    const Params& P;
    std::vector<TraceEntry>* trace;

    // || grad u - c grad U_lambda ||_p^p on the frozen samples
    double operator()(double c, double lambda) const {
        const double hp = 0.5 * P.p;
        const double em = P.m - 1.0, ec = -(P.N - P.beta) / (P.p - P.beta);
        const double amp = P.cnp * std::pow(lambda, P.a_scale + 1.0);
        double sum = 0.0, comp = 0.0;
        double last_r = -1.0, up = 0.0;
        for (size_t i = 0; i < s.w.size(); ++i) {
            if (s.r[i] != last_r) {
                last_r = s.r[i];
                double lr = lambda * last_r;
                up = -amp * std::pow(lr, em) * std::pow(1.0 + std::pow(lr, P.m), ec);
            }
            double dr = s.gr[i] - c * up;
            double term = s.w[i] * std::pow(dr * dr + s.ga[i] * s.ga[i], hp);
            double y = term - comp, t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        if (trace) trace->push_back({c, lambda, sum});
        return sum;
    }
};

DistanceResult search(const SampleSet& s, const Params& P,
                      const DistanceOptions& opts) {
    DistanceResult res;
    Objective obj{s, P, &res.trace};

    double gp = obj(0.0, 1.0);  // c = 0: plain ||grad u||_p^p
    res.grad_norm = std::pow(gp, 1.0 / P.p);
    double gU = std::pow(sharp_constant(P), P.pstar / (P.pstar - P.p));
    double cbar = res.grad_norm / std::pow(gU, 1.0 / P.p);

    double lo = opts.loglam_lo, hi = opts.loglam_hi;
    int nlam = opts.lambda_grid;
    double best = gp, best_c = 0.0, best_l = 1.0;
    const bool seeded = opts.guess_lambda > 0.0;
    if (seeded) {
        double v = obj(opts.guess_c, opts.guess_lambda);
        if (v < best) {
            best = v;
            best_c = opts.guess_c;
            best_l = opts.guess_lambda;
        }
    }
    for (int pass = 0;; ++pass) {
        if (!seeded) {
            std::vector<std::pair<double, double>> grid_pts;
            std::vector<double> grid_obj;
            for (int il = 0; il < nlam; ++il) {
                double ll = lo + (hi - lo) * il / (nlam - 1.0);
                double lambda = std::pow(10.0, ll);
                for (int ic = 0; ic < opts.c_grid; ++ic) {
                    double c = -2.0 * cbar +
                               4.0 * cbar * ic / (opts.c_grid - 1.0);
                    double v = obj(c, lambda);
                    grid_pts.push_back({c, lambda});
                    grid_obj.push_back(v);
                    bool better = v < best;
                    if (!better && v == best)
                        better = lambda < best_l ||
                                 (lambda == best_l && std::fabs(c) < std::fabs(best_c));
                    if (better) {
                        best = v;
                        best_c = c;
                        best_l = lambda;
                    }
                }
            }
            double d_best = std::pow(best, 1.0 / P.p);
            res.near_minima.clear();
            for (size_t i = 0; i < grid_obj.size(); ++i)
                if (std::pow(grid_obj[i], 1.0 / P.p) <= 1.01 * d_best + 1e-300)
                    res.near_minima.push_back(grid_pts[i]);
        }

        const double cstep = std::max(cbar / 6.0, 1e-8);
        const double lstep = (hi - lo) / (nlam - 1.0);
        auto scaled = [&](const std::vector<double>& x) {
            return obj(x[0] * cstep, std::pow(10.0, x[1] * lstep));
        };
        SimplexResult nm =
            nelder_mead(scaled, {best_c / cstep, std::log10(best_l) / lstep},
                        1.0, 1e-14, 1e-8 / std::max(cstep, lstep), opts.max_iter);
        double nm_c = nm.x[0] * cstep, nm_ll = nm.x[1] * lstep;
        if (nm.fval <= best) {
            best = nm.fval;
            best_c = nm_c;
            best_l = std::pow(10.0, nm_ll);
        }
        res.converged = nm.converged;

        double edge = 0.5 * lstep;
        bool pinned = nm_ll <= lo + edge || nm_ll >= hi - edge;
        if (!pinned || pass > 0 || seeded) {
            res.on_boundary = pinned;
            break;
        }
        res.widened = true;
        lo = -opts.widen_to;
        hi = opts.widen_to;
        nlam = 2 * nlam - 1;
    }

    res.d = std::pow(best, 1.0 / P.p);
    res.c_star = best_c;
    res.lambda_star = best_l;
    return res;
}

}  // namespace

DistanceResult distance(const RadialProfile& u, const Params& P,
                        const DistanceOptions& opts) {
    SampleSet s = radial_samples(u, P, opts);
    return search(s, P, opts);
}

DistanceResult distance(const AxisymField& u, const Params& P,
                        const DistanceOptions& opts) {
    SampleSet s = axisym_samples(u, P, opts);
    return search(s, P, opts);
}

Decomposition decompose(const RadialProfile& u, const Params& P,
                        const DistanceOptions& opts) {
    Decomposition dec;
    dec.search = distance(u, P, opts);
    dec.c_star = dec.search.c_star;
    dec.lambda_star = dec.search.lambda_star;

    // below ~1e-7 of the gradient norm the residual is dominated by the
    // cancellation noise of u - c U and cannot be normalized into a direction
    if (dec.search.d <= 1e-7 * dec.search.grad_norm)
        throw DegenerateDecomposition("distance below 1e-7 of the gradient norm");

    auto [U, Z] = tangent_basis(P, dec.lambda_star);
    RadialProfile diff = lincomb({1.0, -dec.c_star}, {u, U});
    double dp = grad_pnorm(diff, P, 1e-11);
    dec.d = std::pow(dp, 1.0 / P.p);
    dec.w = scale_profile(1.0 / dec.d, diff);

    // Weighted inner products <f, g> = int r^{N-1-beta} U^{pstar-2} f g; the
    // residuals are reported as cosines so scale drops out.
    auto inner = [&](const RadialProfile& f, const RadialProfile& g) {
        auto fn = [&](double r) {
            return std::pow(U.value(r), P.pstar - 2.0) * f.value(r) * g.value(r);
        };
        QuadOptions q;
        q.origin_exponent = f.origin_exp_value + g.origin_exp_value;
        double utail = (P.N - P.p) / (P.p - 1.0);
        q.tail_exponent = (P.pstar - 2.0) * utail + std::min(f.tail_exp_value, utail) +
                          std::min(g.tail_exp_value, utail);
        q.breakpoints = f.breakpoints;
        q.breakpoints.insert(q.breakpoints.end(), g.breakpoints.begin(),
                             g.breakpoints.end());
        if (f.support && g.support) q.support_radius = std::min(*f.support, *g.support);
        return radial_integral(fn, P.beta, P, 1e-9, q);
    };
    double ww = inner(dec.w, dec.w);
    double uu = inner(U, U), zz = inner(Z, Z);
    dec.ortho_u = inner(dec.w, U) / std::sqrt(std::max(uu * ww, 1e-300));
    dec.ortho_z = inner(dec.w, Z) / std::sqrt(std::max(zz * ww, 1e-300));
    return dec;
}

}  // namespace hslab
