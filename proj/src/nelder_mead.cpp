#include "hslab/nelder_mead.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hslab {

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, double step,
                          double ftol, double xtol, int max_iter) {
    const size_t n = x0.size();
    std::vector<std::vector<double>> v(n + 1, x0);
    for (size_t i = 0; i < n; ++i) v[i + 1][i] += step;
    std::vector<double> fv(n + 1);
    for (size_t i = 0; i <= n; ++i) fv[i] = f(v[i]);

    std::vector<size_t> ord(n + 1);
    auto sort_simplex = [&] {
        std::iota(ord.begin(), ord.end(), size_t{0});
        std::stable_sort(ord.begin(), ord.end(),
                         [&](size_t a, size_t b) { return fv[a] < fv[b]; });
    };

    SimplexResult res;
    int it = 0;
    std::vector<double> centroid(n), xr(n), xe(n), xc(n);
    for (; it < max_iter; ++it) {
        sort_simplex();
        const size_t best = ord[0], worst = ord[n];
        double fspread = fv[worst] - fv[best];
        double xspread = 0.0;
        for (size_t i = 0; i < n; ++i)
            xspread = std::max(xspread, std::fabs(v[worst][i] - v[best][i]));
        if (fspread <= ftol * (std::fabs(fv[best]) + ftol) || xspread <= xtol) {
            res.converged = true;
            break;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (size_t k = 0; k <= n; ++k) {
            if (k == worst) continue;
            for (size_t i = 0; i < n; ++i) centroid[i] += v[k][i];
        }
        for (size_t i = 0; i < n; ++i) centroid[i] /= static_cast<double>(n);

        for (size_t i = 0; i < n; ++i) xr[i] = 2.0 * centroid[i] - v[worst][i];
        double fr = f(xr);
        if (fr < fv[best]) {
            for (size_t i = 0; i < n; ++i) xe[i] = 3.0 * centroid[i] - 2.0 * v[worst][i];
            double fe = f(xe);
            if (fe < fr) {
                v[worst] = xe;
                fv[worst] = fe;
            } else {
                v[worst] = xr;
                fv[worst] = fr;
            }
            continue;
        }
        if (fr < fv[ord[n - 1]]) {
            v[worst] = xr;
            fv[worst] = fr;
            continue;
        }
        bool outside = fr < fv[worst];
        const std::vector<double>& away = outside ? xr : v[worst];
        for (size_t i = 0; i < n; ++i) xc[i] = 0.5 * (centroid[i] + away[i]);
        double fc = f(xc);
        if (fc < std::min(fr, fv[worst])) {
            v[worst] = xc;
            fv[worst] = fc;
            continue;
        }
        for (size_t k = 0; k <= n; ++k) {
            if (k == best) continue;
            for (size_t i = 0; i < n; ++i)
                v[k][i] = 0.5 * (v[k][i] + v[best][i]);
            fv[k] = f(v[k]);
        }
    }

    sort_simplex();
    res.x = v[ord[0]];
    res.fval = fv[ord[0]];
    res.iterations = it;
    return res;
}

}  // namespace hslab
