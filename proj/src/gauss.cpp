#include "hslab/gauss.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>

#include "hslab/errors.hpp"

namespace hslab {

// Implicit-shift QL for a symmetric tridiagonal matrix.  d holds the
// diagonal, e[i] couples rows i and i+1.  Only the first row of the
// eigenvector matrix is accumulated; that is all Golub-Welsch needs.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>* first_row) {
    const int n = static_cast<int>(d.size());
    std::vector<double> z;
    if (first_row) {
        z.assign(n, 0.0);
        if (n > 0) z[0] = 1.0;
    }
    if (n == 0) return;
    e.resize(n);
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
                if (std::fabs(e[m]) <= DBL_EPSILON * dd) break;
            }
            if (m != l) {
                if (iter++ == 60) throw EigenFailure("tridiag_ql: QL sweep did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (first_row) {
                        f = z[i + 1];
                        z[i + 1] = s * z[i] + c * f;
                        z[i] = c * z[i] - s * f;
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return d[a] < d[b]; });
    std::vector<double> ds(n), zs;
    if (first_row) zs.resize(n);
    for (int i = 0; i < n; ++i) {
        ds[i] = d[order[i]];
        if (first_row) zs[i] = z[order[i]];
    }
    d = std::move(ds);
    if (first_row) *first_row = std::move(zs);
}

void gauss_jacobi(int n, double a, double b, std::vector<double>& x,
                  std::vector<double>& w) {
    if (n < 1) throw GridError("gauss_jacobi: need n >= 1");
    std::vector<double> d(n), e(n, 0.0);
    const double ab = a + b;
    d[0] = (b - a) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double t = 2.0 * k + ab;
        d[k] = (b * b - a * a) / (t * (t + 2.0));
        if (k == 1) {
            // (k + ab) and (t - 1) cancel at k = 1; the reduced form stays
            // finite for a + b = -1 (Chebyshev).
            e[0] = std::sqrt(4.0 * (1.0 + a) * (1.0 + b) /
                             ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
        } else {
            double num = 4.0 * k * (k + a) * (k + b) * (k + ab);
            double den = t * t * (t + 1.0) * (t - 1.0);
            e[k - 1] = std::sqrt(num / den);
        }
    }
    std::vector<double> z;
    tridiag_ql(d, e, &z);
    const double mu0 = std::pow(2.0, ab + 1.0) *
                       std::exp(std::lgamma(a + 1.0) + std::lgamma(b + 1.0) -
                                std::lgamma(ab + 2.0));
    x = d;
    w.resize(n);
    for (int i = 0; i < n; ++i) w[i] = mu0 * z[i] * z[i];
}

}  // namespace hslab
