#include "hslab/spectral.hpp"

#include <algorithm>
#include <cmath>

#include "hslab/errors.hpp"
#include "hslab/gauss.hpp"
#include "hslab/profile.hpp"
#include "hslab/tridiag.hpp"

namespace hslab {

double default_r_max(const Params& P) {
    double decay = (P.N - P.p) / (P.p - 1.0);
    return std::clamp(std::pow(10.0, 6.5 / decay), 1e4, 1e12);
}

namespace {

struct Assembled {
    std::vector<double> nodes;   // all n+1 geometric nodes
    std::vector<double> sd, so;  // gradient term, full node set
    std::vector<double> md, mo;  // r^{N-3} mass term (consistent)
    std::vector<double> bd;      // weighted mass, lumped
};

// Element integrals with 6-point Gauss; weights never sampled at r = 0.
Assembled assemble_full(const Params& P, const GridSpec& g) {
    if (!(g.r_min > 0.0) || !(g.r_max > g.r_min) || g.n < 100)
        throw GridError("grid spec: need 0 < r_min < r_max and n >= 100");
    const int n = g.n;
    Assembled A;
    A.nodes.resize(n + 1);
    double ratio = std::log(g.r_max / g.r_min) / n;
    for (int i = 0; i <= n; ++i) A.nodes[i] = g.r_min * std::exp(ratio * i);
    A.nodes[n] = g.r_max;

    RadialProfile U = extremal(P, 1.0);
    const double pm2 = P.p - 2.0, ps2 = P.pstar - 2.0;
    auto wgrad = [&](double r) {
        return std::pow(std::fabs(U.dvalue(r)), pm2) * std::pow(r, P.N - 1.0);
    };
    auto wang = [&](double r) {
        return std::pow(std::fabs(U.dvalue(r)), pm2) * std::pow(r, P.N - 3.0);
    };
    auto wmass = [&](double r) {
        return std::pow(r, P.N - 1.0 - P.beta) * std::pow(U.value(r), ps2);
    };

    std::vector<double> gx, gw;
    gauss_legendre(6, gx, gw);

    A.sd.assign(n + 1, 0.0);
    A.so.assign(n, 0.0);
    A.md.assign(n + 1, 0.0);
    A.mo.assign(n, 0.0);
    A.bd.assign(n + 1, 0.0);
    for (int e = 0; e < n; ++e) {
        double a = A.nodes[e], b = A.nodes[e + 1];
        double h = b - a, half = 0.5 * h, mid = 0.5 * (a + b);
        double sg = 0.0, m00 = 0.0, m01 = 0.0, m11 = 0.0;
        double b0 = 0.0, b1 = 0.0;
        for (size_t j = 0; j < gx.size(); ++j) {
            double r = mid + half * gx[j];
            double w = half * gw[j];
            double phi1 = (r - a) / h, phi0 = 1.0 - phi1;
            sg += w * wgrad(r);
            double wa = w * wang(r);
            m00 += wa * phi0 * phi0;
            m01 += wa * phi0 * phi1;
            m11 += wa * phi1 * phi1;
            double wb = w * wmass(r);
            b0 += wb * phi0;
            b1 += wb * phi1;
        }
        double k = sg / (h * h);
        A.sd[e] += k;
        A.sd[e + 1] += k;
        A.so[e] -= k;
        A.md[e] += m00;
        A.md[e + 1] += m11;
        A.mo[e] += m01;
        A.bd[e] += b0;
        A.bd[e + 1] += b1;
    }
    return A;
}

FemForms restrict_bc(const Assembled& A, const Params& P, int k) {
    const double lam_k = static_cast<double>(k) * (P.N - 2.0 + k);
    int first = (k == 0) ? 0 : 1;
    int last = static_cast<int>(A.nodes.size()) - 2;  // r_max node removed
    FemForms F;
    for (int i = first; i <= last; ++i) {
        F.nodes.push_back(A.nodes[i]);
        F.a_diag.push_back((P.p - 1.0) * A.sd[i] + lam_k * A.md[i]);
        F.b_diag.push_back(A.bd[i]);
        if (i < last)
            F.a_off.push_back((P.p - 1.0) * A.so[i] + lam_k * A.mo[i]);
    }
    return F;
}

struct SymTridiag {
    std::vector<double> d, e;
};

SymTridiag to_standard(const FemForms& F) {
    SymTridiag T;
    size_t n = F.a_diag.size();
    T.d.resize(n);
    T.e.resize(n - 1);
    for (size_t i = 0; i < n; ++i) T.d[i] = F.a_diag[i] / F.b_diag[i];
    for (size_t i = 0; i + 1 < n; ++i)
        T.e[i] = F.a_off[i] / std::sqrt(F.b_diag[i] * F.b_diag[i + 1]);
    return T;
}

std::vector<double> solve_values(const Params& P, int k, int count,
                                 const GridSpec& g) {
    FemForms F = restrict_bc(assemble_full(P, g), P, k);
    SymTridiag T = to_standard(F);
    return tridiag_eigenvalues(T.d, T.e, 0, count - 1);
}

}  // namespace

FemForms assemble_mode(const Params& P, int k, const GridSpec& g_in) {
    GridSpec g = g_in;
    if (g.r_max <= 0.0) g.r_max = default_r_max(P);
    return restrict_bc(assemble_full(P, g), P, k);
}

SpectralResult eigen_mode(const Params& P, int k, int count,
                          const GridSpec& g_in, bool want_vectors) {
    if (count < 1 || count > 10) throw DomainError("eigen_mode: count must be 1..10");
    GridSpec g = g_in;
    if (g.r_max <= 0.0) g.r_max = default_r_max(P);

    SpectralResult res;
    res.k = k;
    res.lambda_k = static_cast<double>(k) * (P.N - 2.0 + k);
    res.grid = g;

    FemForms F = restrict_bc(assemble_full(P, g), P, k);
    SymTridiag T = to_standard(F);
    res.nodes = F.nodes;
    res.eigenvalues = tridiag_eigenvalues(T.d, T.e, 0, count - 1);

    if (want_vectors) {
        std::vector<std::vector<double>> basis;
        for (int j = 0; j < count; ++j) {
            std::vector<double> y = tridiag_eigenvector(
                T.d, T.e, res.eigenvalues[j], basis, 0x5eedull + j);
            basis.push_back(y);
            std::vector<double> v(y.size());
            for (size_t i = 0; i < y.size(); ++i)
                v[i] = y[i] / std::sqrt(F.b_diag[i]);
            res.eigenvectors.push_back(std::move(v));
        }
    }

    GridSpec g2 = g;
    g2.n = 2 * g.n;
    std::vector<double> refined = solve_values(P, k, count, g2);
    res.refinement_shift.resize(count);
    for (int j = 0; j < count; ++j)
        res.refinement_shift[j] = refined[j] - res.eigenvalues[j];
    return res;
}

double analytic_residual(const Params& P, int which) {
    return analytic_residual(P, which, P.K);
}

double analytic_residual(const Params& P, int which, double K_value) {
    // eigenpair always uses the derived K; K_value perturbs only the equation
    // coefficients, so a wrong value must show up as a nonzero residual
    const double p = P.p, K = K_value;
    const double gexp = p / (p - 1.0), c = P.K / p;
    const double mu = (which == 0) ? 0.0 : P.K - 1.0;

    const int npts = 201;
    std::vector<double> eta(npts), resid(npts);
    for (int i = 0; i < npts; ++i) {
        double s = std::pow(10.0, -2.0 + 4.0 * i / (npts - 1.0));
        double t = std::pow(s, gexp);
        double tp = gexp * t / s;
        double tpp = gexp * (gexp - 1.0) * t / (s * s);
        double B = std::pow(1.0 + t, -c);
        double Bp = -c * std::pow(1.0 + t, -c - 1.0) * tp;
        double Bpp = c * (c + 1.0) * std::pow(1.0 + t, -c - 2.0) * tp * tp -
                     c * std::pow(1.0 + t, -c - 1.0) * tpp;
        double e0, e1, e2;
        if (which == 0) {
            double A = (p - 1.0) - t;
            e0 = A * B;
            e1 = -tp * B + A * Bp;
            e2 = -tpp * B - 2.0 * tp * Bp + A * Bpp;
        } else {
            double sig = std::pow(s, 1.0 / (p - 1.0));
            double sigp = sig / ((p - 1.0) * s);
            double sigpp = sig * (1.0 / (p - 1.0)) * (1.0 / (p - 1.0) - 1.0) / (s * s);
            e0 = sig * B;
            e1 = sigp * B + sig * Bp;
            e2 = sigpp * B + 2.0 * sigp * Bp + sig * Bpp;
        }
        double damp = (e1 / s) * ((K - 1.0) / (p - 1.0) +
                                  (p - 2.0) * K / ((p - 1.0) * (1.0 + t)));
        double eig = -mu * e0 / ((p - 1.0) * s * s);
        double pot = K * (K * p - K + p) / ((p - 1.0) * (p - 1.0)) *
                     std::pow(s, gexp - 2.0) / ((1.0 + t) * (1.0 + t)) * e0;
        eta[i] = std::fabs(e0);
        resid[i] = std::fabs(e2 + damp + eig + pot);
    }
    double emax = *std::max_element(eta.begin(), eta.end());
    double rmax = *std::max_element(resid.begin(), resid.end());
    return rmax / emax;
}

SectorBound sector_bound(const Params& P) {
    SectorBound b;
    b.lhs = std::pow((P.p - P.beta) / P.p, 2.0) * (P.K - 1.0);
    b.rhs = P.N - 1.0;
    b.ok = P.beta > 0.0 && b.lhs > 0.0 && b.lhs < b.rhs;
    return b;
}

GapReport spectral_gap(const Params& P, const GridSpec& g) {
    GapReport rep;
    SpectralResult k0 = eigen_mode(P, 0, 3, g);
    rep.mu1 = k0.eigenvalues[0];
    rep.mu2 = k0.eigenvalues[1];
    rep.mu3 = k0.eigenvalues[2];
    rep.k1_bottom = eigen_mode(P, 1, 1, g).eigenvalues[0];
    rep.k2_bottom = eigen_mode(P, 2, 1, g).eigenvalues[0];
    rep.neutral = P.pstar - 1.0;
    rep.mu3_eff = rep.mu3;
    rep.attaining_mode = 0;
    if (rep.k1_bottom < rep.mu3_eff) {
        rep.mu3_eff = rep.k1_bottom;
        rep.attaining_mode = 1;
    }
    if (rep.k2_bottom < rep.mu3_eff) {
        rep.mu3_eff = rep.k2_bottom;
        rep.attaining_mode = 2;
    }
    rep.tau = 0.5 * (rep.mu3_eff - rep.neutral);
    rep.positive = rep.tau > 0.0;
    return rep;
}

double sup_mass_over_energy(const Params& P, double lo, double hi,
                            const GridSpec& g_in) {
    GridSpec g = g_in;
    if (g.r_max <= 0.0)
        g.r_max = std::max(default_r_max(P), std::min(4.0 * hi, 1e9));
    Assembled A = assemble_full(P, g);

    // k = 0 gradient energy only, natural at r_min, essential at r_max.
    int n = static_cast<int>(A.nodes.size()) - 1;
    std::vector<double> ad(A.sd.begin(), A.sd.end() - 1);
    std::vector<double> ae(A.so.begin(), A.so.end() - 1);
    std::vector<double> bd(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (A.nodes[i] >= lo && A.nodes[i] <= hi) bd[i] = A.bd[i];

    // Power iteration for the top eigenvalue of  A^{-1} B_restricted.
    std::vector<double> x(n, 0.0);
    for (int i = 0; i < n; ++i)
        if (bd[i] > 0.0) x[i] = 1.0;
    double value = 0.0;
    for (int it = 0; it < 600; ++it) {
        std::vector<double> bx(n);
        for (int i = 0; i < n; ++i) bx[i] = bd[i] * x[i];
        std::vector<double> y = tridiag_spd_solve(ad, ae, bx);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < n; ++i) num += bd[i] * y[i] * y[i];
        for (int i = 0; i < n; ++i) {
            double ay = ad[i] * y[i];
            if (i > 0) ay += ae[i - 1] * y[i - 1];
            if (i + 1 < n) ay += ae[i] * y[i + 1];
            den += y[i] * ay;
        }
        if (!(den > 0.0)) throw EigenFailure("sup quotient: degenerate iterate");
        double next = num / den;
        double scale = 0.0;
        for (double v : y) scale = std::max(scale, std::fabs(v));
        for (int i = 0; i < n; ++i) x[i] = y[i] / scale;
        if (it > 3 && std::fabs(next - value) <= 1e-11 * std::fabs(next)) {
            value = next;
            break;
        }
        value = next;
    }
    return value;
}

}  // namespace hslab
