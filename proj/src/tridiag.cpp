#include "hslab/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hslab/errors.hpp"
#include "hslab/rng.hpp"

namespace hslab {

namespace {

double pivmin(const std::vector<double>& e) {
    double m = 1.0;
    for (double v : e) m = std::max(m, v * v);
    return m * std::numeric_limits<double>::min() * 64.0;
}

}  // namespace

int sturm_count_below(const std::vector<double>& d, const std::vector<double>& e,
                      double x) {
    const double floor_piv = pivmin(e);
    int count = 0;
    double q = 1.0;
    for (size_t i = 0; i < d.size(); ++i) {
        double e2 = (i == 0) ? 0.0 : e[i - 1] * e[i - 1];
        q = (d[i] - x) - e2 / q;
        if (std::fabs(q) < floor_piv) q = -floor_piv;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> tridiag_eigenvalues(const std::vector<double>& d,
                                        const std::vector<double>& e, int k_lo,
                                        int k_hi, double rel_tol) {
    const int n = static_cast<int>(d.size());
    if (n == 0 || k_lo < 0 || k_hi >= n || k_lo > k_hi)
        throw DomainError("tridiag_eigenvalues: bad index range");
    double lo = d[0], hi = d[0];
    for (int i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::fabs(e[i - 1]);
        if (i + 1 < n) r += std::fabs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const double radius = std::max(hi - lo, 1.0);
    lo -= 1e-12 * radius;
    hi += 1e-12 * radius;

    std::vector<double> out;
    out.reserve(k_hi - k_lo + 1);
    for (int k = k_lo; k <= k_hi; ++k) {
        double a = lo, b = hi;
        // Relative tolerance per eigenvalue; the Gershgorin radius can be
        // many orders larger than the low eigenvalues we target.
        int guard = 0;
        while (b - a > rel_tol * std::max(1.0, std::fabs(a) + std::fabs(b)) &&
               ++guard < 2048) {
            double mid = 0.5 * (a + b);
            if (sturm_count_below(d, e, mid) > k)
                b = mid;
            else
                a = mid;
        }
        out.push_back(0.5 * (a + b));
    }
    return out;
}

namespace {

// (T - lam I) x = b with partial pivoting; fill-in confined to a second
// superdiagonal.
struct ShiftedFactor {
    std::vector<double> di, s1, s2, low;
    std::vector<int> swapped;

    ShiftedFactor(const std::vector<double>& d, const std::vector<double>& e,
                  double lam) {
        const int n = static_cast<int>(d.size());
        di.resize(n);
        s1.assign(n, 0.0);
        s2.assign(n, 0.0);
        low.assign(n, 0.0);
        swapped.assign(n, 0);
        for (int i = 0; i < n; ++i) di[i] = d[i] - lam;
        for (int i = 0; i + 1 < n; ++i) s1[i] = e[i];
        const double tiny = pivmin(e);
        for (int i = 0; i + 1 < n; ++i) {
            double sub = e[i];
            if (std::fabs(sub) > std::fabs(di[i])) {
                swapped[i] = 1;
                std::swap(di[i], sub);
                std::swap(s1[i], di[i + 1]);
                s2[i] = s1[i + 1];
                s1[i + 1] = 0.0;
            }
            double piv = di[i];
            if (std::fabs(piv) < tiny) piv = (piv < 0 ? -tiny : tiny), di[i] = piv;
            double m = sub / piv;
            low[i] = m;
            di[i + 1] -= m * s1[i];
            s1[i + 1] -= m * s2[i];
        }
        if (std::fabs(di[n - 1]) < tiny) di[n - 1] = tiny;
    }

    void solve(std::vector<double>& b) const {
        const int n = static_cast<int>(di.size());
        for (int i = 0; i + 1 < n; ++i) {
            if (swapped[i]) std::swap(b[i], b[i + 1]);
            b[i + 1] -= low[i] * b[i];
        }
        for (int i = n - 1; i >= 0; --i) {
            double v = b[i];
            if (i + 1 < n) v -= s1[i] * b[i + 1];
            if (i + 2 < n) v -= s2[i] * b[i + 2];
            b[i] = v / di[i];
        }
    }
};

void orthogonalize(std::vector<double>& v,
                   const std::vector<std::vector<double>>& basis) {
    for (const auto& u : basis) {
        double dot = 0.0;
        for (size_t i = 0; i < v.size(); ++i) dot += u[i] * v[i];
        for (size_t i = 0; i < v.size(); ++i) v[i] -= dot * u[i];
    }
}

double normalize(std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    s = std::sqrt(s);
    if (s > 0.0)
        for (double& x : v) x /= s;
    return s;
}

}  // namespace

std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e, double lam,
                                        const std::vector<std::vector<double>>& deflate,
                                        unsigned long long seed) {
    const int n = static_cast<int>(d.size());
    ShiftedFactor fac(d, e, lam);
    Rng rng(seed);
    std::vector<double> v(n);
    for (double& x : v) x = rng.uniform(-1.0, 1.0);
    orthogonalize(v, deflate);
    normalize(v);
    double growth = 0.0;
    for (int sweep = 0; sweep < 8; ++sweep) {
        fac.solve(v);
        orthogonalize(v, deflate);
        growth = normalize(v);
        if (growth == 0.0) {
            for (double& x : v) x = rng.uniform(-1.0, 1.0);
            orthogonalize(v, deflate);
            normalize(v);
            continue;
        }
        if (growth > 1.0 / (1e-10)) break;
    }
    if (!(growth > 0.0)) throw EigenFailure("inverse iteration collapsed");
    int imax = 0;
    for (int i = 1; i < n; ++i)
        if (std::fabs(v[i]) > std::fabs(v[imax])) imax = i;
    if (v[imax] < 0.0)
        for (double& x : v) x = -x;
    return v;
}

std::vector<double> tridiag_spd_solve(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      std::vector<double> b) {
    const int n = static_cast<int>(d.size());
    std::vector<double> diag(n), low(n, 0.0);
    diag[0] = d[0];
    if (!(diag[0] > 0.0)) throw EigenFailure("tridiag_spd_solve: not positive definite");
    for (int i = 1; i < n; ++i) {
        low[i] = e[i - 1] / diag[i - 1];
        diag[i] = d[i] - low[i] * e[i - 1];
        if (!(diag[i] > 0.0))
            throw EigenFailure("tridiag_spd_solve: not positive definite");
    }
    for (int i = 1; i < n; ++i) b[i] -= low[i] * b[i - 1];
    for (int i = 0; i < n; ++i) b[i] /= diag[i];
    for (int i = n - 2; i >= 0; --i) b[i] -= low[i + 1] * b[i + 1];
    return b;
}

}  // namespace hslab
