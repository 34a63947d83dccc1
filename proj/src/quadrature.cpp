#include "hslab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hslab/gauss.hpp"

namespace hslab {

namespace {

constexpr double kTiny = 5e-300;

struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double x) {
        double y = x - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

int grading_depth(double endpoint_power, double rel_tol) {
    // endpoint_power is the power of the integrand (measure included) at the
    // graded endpoint; mass of the unresolved stub [0, 2^-L] scales like
    // 2^{-L (power+1)}.
    double need = std::log2(1.0 / std::max(rel_tol, 1e-14)) + 8.0;
    double L = std::ceil(need / (endpoint_power + 1.0));
    return static_cast<int>(std::clamp(L, 24.0, 200.0));
}

std::vector<double> graded_edges(int depth) {
    std::vector<double> e;
    e.reserve(depth + 2);
    e.push_back(0.0);
    for (int k = depth; k >= 0; --k) e.push_back(std::ldexp(1.0, -k));
    return e;  // 0, 2^-depth, ..., 1/2, 1
}

void insert_breaks(std::vector<double>& edges, const std::vector<double>& brk) {
    for (double b : brk)
        if (b > 0.0 && b < 1.0) edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    std::vector<double> out;
    for (double x : edges) {
        // relative merge only: graded edges near 0 are legitimately tiny
        if (!out.empty() && x - out.back() <= 1e-9 * x) continue;
        out.push_back(x);
    }
    edges = std::move(out);
}

std::vector<double> split_panels(const std::vector<double>& edges) {
    std::vector<double> out;
    out.reserve(edges.size() * 2);
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        out.push_back(edges[i]);
        out.push_back(0.5 * (edges[i] + edges[i + 1]));
    }
    out.push_back(edges.back());
    return out;
}

// One evaluation of sum_panels sum_nodes fx(x) over the panel set.
void eval_edges(const std::function<double(double)>& fx,
                const std::vector<double>& edges, const std::vector<double>& gx,
                const std::vector<double>& gw, Kahan& val, Kahan& l1, long& evals) {
    for (size_t i = 0; i + 1 < edges.size(); ++i) {
        const double a = edges[i], b = edges[i + 1];
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (size_t j = 0; j < gx.size(); ++j) {
            const double x = mid + half * gx[j];
            const double v = fx(x);
            ++evals;
            if (v == 0.0 || std::fabs(v) < kTiny) continue;
            if (!std::isfinite(v))
                throw Error("radial_integral: non-finite integrand at x = " +
                            std::to_string(x));
            const double contrib = v * half * gw[j];
            val.add(contrib);
            l1.add(std::fabs(contrib));
        }
    }
}

struct PanelPair {
    std::vector<double> near;  // r in (0, 1]
    std::vector<double> far;   // t in (0, 1], r = 1/t
};

PanelPair build_panels(double weight_exponent, const Params& P, double rel_tol,
                       const QuadOptions& o) {
    const double alpha = o.origin_exponent + (P.N - 1 - weight_exponent);
    if (alpha <= -1.0 + 1e-9)
        throw SingularityError(
            "radial_integral: declared origin power " + std::to_string(alpha) +
            " of the measure-weighted integrand is not integrable");

    PanelPair pp;
    pp.near = graded_edges(grading_depth(alpha, rel_tol));
    std::vector<double> nb, fb;
    for (double r : o.breakpoints)
        (r < 1.0 ? nb : fb).push_back(r < 1.0 ? r : 1.0 / r);
    insert_breaks(pp.near, nb);

    double sup = o.support_radius.value_or(-1.0);
    if (sup > 0.0 && sup <= 1.0) {
        // integrand vanishes beyond sup: clip the near side, skip the tail
        std::vector<double> clipped;
        for (double e : pp.near)
            if (e < sup) clipped.push_back(e);
        clipped.push_back(sup);
        pp.near = std::move(clipped);
        return pp;
    }

    const bool compact = sup > 0.0;
    const double gamma_t = compact ? 1e9
                                   : o.tail_exponent + weight_exponent - P.N - 1.0;
    if (!compact && gamma_t <= -1.0 + 1e-9)
        throw SingularityError(
            "radial_integral: declared tail decay leaves a divergent integral");
    pp.far = graded_edges(grading_depth(std::min(gamma_t, 1e9), rel_tol));
    insert_breaks(pp.far, fb);
    if (compact) {
        const double tcut = 1.0 / sup;
        std::vector<double> clipped;
        clipped.push_back(tcut);
        for (double e : pp.far)
            if (e > tcut) clipped.push_back(e);
        pp.far = std::move(clipped);
    }
    return pp;
}

}  // namespace

QuadResult radial_integral_full(const std::function<double(double)>& f,
                                double weight_exponent, const Params& P,
                                double rel_tol, const QuadOptions& opts) {
    PanelPair pp = build_panels(weight_exponent, P, rel_tol, opts);
    std::vector<double> gx, gw;
    gauss_legendre(opts.nodes_per_panel, gx, gw);

    const double rpow = P.N - 1 - weight_exponent;
    const double tpow = weight_exponent - P.N - 1;
    auto near_f = [&](double r) {
        double v = f(r);
        return (v == 0.0) ? 0.0 : v * std::pow(r, rpow);
    };
    auto far_f = [&](double t) {
        double v = f(1.0 / t);
        return (v == 0.0) ? 0.0 : v * std::pow(t, tpow);
    };

    QuadResult res;
    double prev = 0.0;
    for (int round = 0; round <= opts.max_rounds; ++round) {
        if (round > 0) {
            pp.near = split_panels(pp.near);
            if (pp.far.size() > 1) pp.far = split_panels(pp.far);
        }
        Kahan val, l1;
        eval_edges(near_f, pp.near, gx, gw, val, l1, res.evaluations);
        if (pp.far.size() > 1) eval_edges(far_f, pp.far, gx, gw, val, l1, res.evaluations);
        res.value = P.sphere_area * val.s;
        res.l1_mass = P.sphere_area * l1.s;
        res.rounds = round;
        if (round > 0) {
            res.error_estimate = std::fabs(res.value - prev);
            if (res.error_estimate <= rel_tol * std::max(res.l1_mass, kTiny) ||
                res.l1_mass == 0.0)
                return res;
        }
        prev = res.value;
    }
    throw ConvergenceError(
        "radial_integral: change " + std::to_string(res.error_estimate) +
        " still above " + std::to_string(rel_tol) + " * mass " +
        std::to_string(res.l1_mass) + " after " +
        std::to_string(opts.max_rounds) + " refinement rounds");
}

double radial_integral(const std::function<double(double)>& f,
                       double weight_exponent, const Params& P, double rel_tol,
                       const QuadOptions& opts) {
    return radial_integral_full(f, weight_exponent, P, rel_tol, opts).value;
}

namespace {

struct AngularRule {
    std::vector<double> theta, wt;  // wt includes sin^{N-2}
};

// Single Gauss-Jacobi rule in x = cos(theta) when the integrand is globally
// smooth in angle, graded Legendre panels (weight folded in) otherwise.
AngularRule build_angular(const Params& P, int n_nodes,
                          const std::optional<std::pair<double, double>>& feature) {
    AngularRule ar;
    if (P.N >= 3 && !feature) {
        std::vector<double> x, w;
        gauss_jacobi(n_nodes, 0.5 * (P.N - 3), 0.5 * (P.N - 3), x, w);
        ar.theta.resize(x.size());
        ar.wt.resize(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
            ar.theta[i] = std::acos(std::clamp(x[x.size() - 1 - i], -1.0, 1.0));
            ar.wt[i] = w[x.size() - 1 - i];
        }
        return ar;
    }
    std::vector<double> edges{0.0, M_PI};
    for (int k = 1; k <= 6; ++k) {
        edges.push_back(M_PI * std::ldexp(1.0, -k));
        edges.push_back(M_PI - M_PI * std::ldexp(1.0, -k));
    }
    if (feature) {
        auto [t0, width] = *feature;
        double h = std::max(width, 1e-6);
        for (double s = M_PI; s > 0.25 * h; s *= 0.5) {
            if (t0 - s > 0.0) edges.push_back(t0 - s);
            if (t0 + s < M_PI) edges.push_back(t0 + s);
        }
        if (t0 > 0.0 && t0 < M_PI) edges.push_back(t0);
    }
    std::sort(edges.begin(), edges.end());
    std::vector<double> uniq;
    for (double e : edges)
        if (uniq.empty() || e - uniq.back() > 1e-12) uniq.push_back(e);

    const int per_panel = 12;
    std::vector<double> gx, gw;
    gauss_legendre(per_panel, gx, gw);
    for (size_t i = 0; i + 1 < uniq.size(); ++i) {
        double half = 0.5 * (uniq[i + 1] - uniq[i]);
        double mid = 0.5 * (uniq[i + 1] + uniq[i]);
        for (int j = 0; j < per_panel; ++j) {
            double th = mid + half * gx[j];
            ar.theta.push_back(th);
            ar.wt.push_back(half * gw[j] * std::pow(std::sin(th), P.N - 2.0));
        }
    }
    return ar;
}

}  // namespace

QuadResult axisym_integral_full(const std::function<double(double, double)>& g,
                                double weight_exponent, const Params& P,
                                double rel_tol, const AxisymQuadOptions& opts) {
    PanelPair pp = build_panels(weight_exponent, P, rel_tol, opts.radial);
    std::vector<double> gx, gw;
    gauss_legendre(opts.radial.nodes_per_panel, gx, gw);

    const double rpow = P.N - 1 - weight_exponent;
    const double tpow = weight_exponent - P.N - 1;

    QuadResult res;
    double prev = 0.0;
    int n_ang = opts.angular_nodes;
    for (int round = 0; round <= opts.max_rounds; ++round) {
        if (round > 0) {
            pp.near = split_panels(pp.near);
            if (pp.far.size() > 1) pp.far = split_panels(pp.far);
            n_ang *= 2;
        }
        AngularRule ar = build_angular(P, n_ang, opts.angular_feature);
        auto slice = [&](double r) {
            Kahan acc;
            for (size_t j = 0; j < ar.theta.size(); ++j) {
                double v = g(r, ar.theta[j]);
                ++res.evaluations;
                if (v == 0.0 || std::fabs(v) < kTiny) continue;
                if (!std::isfinite(v))
                    throw Error("axisym_integral: non-finite integrand at rho = " +
                                std::to_string(r));
                acc.add(v * ar.wt[j]);
            }
            return acc.s;
        };
        auto near_f = [&](double r) {
            double v = slice(r);
            return (v == 0.0) ? 0.0 : v * std::pow(r, rpow);
        };
        auto far_f = [&](double t) {
            double v = slice(1.0 / t);
            return (v == 0.0) ? 0.0 : v * std::pow(t, tpow);
        };
        Kahan val, l1;
        long dummy = 0;
        eval_edges(near_f, pp.near, gx, gw, val, l1, dummy);
        if (pp.far.size() > 1) eval_edges(far_f, pp.far, gx, gw, val, l1, dummy);
        res.value = P.sphere_area_sub * val.s;
        res.l1_mass = P.sphere_area_sub * l1.s;
        res.rounds = round;
        if (round > 0) {
            res.error_estimate = std::fabs(res.value - prev);
            if (res.error_estimate <= rel_tol * std::max(res.l1_mass, kTiny) ||
                res.l1_mass == 0.0)
                return res;
        }
        prev = res.value;
    }
    throw ConvergenceError(
        "axisym_integral: change " + std::to_string(res.error_estimate) +
        " still above tolerance after " + std::to_string(opts.max_rounds) +
        " rounds");
}

double axisym_integral(const std::function<double(double, double)>& g,
                       double weight_exponent, const Params& P, double rel_tol,
                       const AxisymQuadOptions& opts) {
    return axisym_integral_full(g, weight_exponent, P, rel_tol, opts).value;
}

RadialRule make_radial_rule(const Params& P, const QuadOptions& opts,
                            int extra_rounds) {
    PanelPair pp = build_panels(0.0, P, 1e-10, opts);
    for (int k = 0; k < extra_rounds; ++k) {
        pp.near = split_panels(pp.near);
        if (pp.far.size() > 1) pp.far = split_panels(pp.far);
    }
    std::vector<double> gx, gw;
    gauss_legendre(opts.nodes_per_panel, gx, gw);

    RadialRule rule;
    auto push_near = [&](double a, double b) {
        double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (size_t j = 0; j < gx.size(); ++j) {
            double r = mid + half * gx[j];
            rule.r.push_back(r);
            rule.w.push_back(P.sphere_area * half * gw[j] * std::pow(r, P.N - 1.0));
        }
    };
    auto push_far = [&](double a, double b) {
        double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        for (size_t j = 0; j < gx.size(); ++j) {
            double t = mid + half * gx[j];
            rule.r.push_back(1.0 / t);
            rule.w.push_back(P.sphere_area * half * gw[j] *
                             std::pow(t, -(P.N + 1.0)));
        }
    };
    for (size_t i = 0; i + 1 < pp.near.size(); ++i) push_near(pp.near[i], pp.near[i + 1]);
    for (size_t i = 0; i + 1 < pp.far.size(); ++i) push_far(pp.far[i], pp.far[i + 1]);
    return rule;
}

AxisymRule make_axisym_rule(const Params& P, const AxisymQuadOptions& opts,
                            int extra_rounds) {
    QuadOptions r0 = opts.radial;
    RadialRule base = make_radial_rule(P, r0, extra_rounds);
    AxisymRule rule;
    rule.rho = base.r;
    rule.wr.resize(base.w.size());
    for (size_t i = 0; i < base.w.size(); ++i)
        rule.wr[i] = base.w[i] / P.sphere_area;  // keep rho^{N-1} only
    AngularRule ar = build_angular(P, opts.angular_nodes, opts.angular_feature);
    rule.theta = ar.theta;
    rule.wt.resize(ar.wt.size());
    for (size_t j = 0; j < ar.wt.size(); ++j)
        rule.wt[j] = P.sphere_area_sub * ar.wt[j];
    return rule;
}

}  // namespace hslab
