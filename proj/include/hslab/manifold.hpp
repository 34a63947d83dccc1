#pragma once

#include <utility>
#include <vector>

#include "hslab/field.hpp"
#include "hslab/params.hpp"
#include "hslab/profile.hpp"

namespace hslab {

struct DistanceOptions {
    double loglam_lo = -4.0;  // log10 lambda search window
    double loglam_hi = 4.0;
    int lambda_grid = 33;
    int c_grid = 25;
    int extra_rounds = 1;     // frozen-rule refinement
    int max_iter = 400;
    double widen_to = 8.0;    // retry half-width when the optimum sits on the edge
    double guess_c = 0.0;      // guess_lambda > 0: skip the coarse scan and
    double guess_lambda = 0.0; // polish from (guess_c, guess_lambda) directly
};

struct TraceEntry {
    double c, lambda, objective;
};

struct DistanceResult {
    double d = 0.0;
    double c_star = 0.0;
    double lambda_star = 1.0;
    double grad_norm = 0.0;           // ||grad u||_p under the same frozen rule
    bool converged = false;
    bool widened = false;             // search window was enlarged
    bool on_boundary = false;         // still pinned after widening
    std::vector<TraceEntry> trace;    // every objective evaluation
    std::vector<std::pair<double, double>> near_minima;  // grid (c, lambda) within 1% in d
};

// inf over (c, lambda) of ||grad u - c grad U_lambda||_p.  Coarse grid over
// log10 lambda x c in [-2 cbar, 2 cbar], cbar = ||grad u||_p / ||grad U||_p,
// then Nelder-Mead in (c, log lambda) on a frozen quadrature rule.  Ties go to
// the smaller lambda, then the smaller |c|.
DistanceResult distance(const RadialProfile& u, const Params& P,
                        const DistanceOptions& opts = {});
DistanceResult distance(const AxisymField& u, const Params& P,
                        const DistanceOptions& opts = {});

struct Decomposition {
    double c_star = 0.0;
    double lambda_star = 1.0;
    double d = 0.0;           // adaptive renormalization of the rule-based value
    RadialProfile w;          // (u - c* U_{lambda*}) / d, unit gradient p-norm
    double ortho_u = 0.0;     // cosine of w against U in the U^{pstar-2} weight
    double ortho_z = 0.0;     // cosine of w against Z in the same weight
    DistanceResult search;
};

// u = c* U_{lambda*} + d w.  The two weighted residuals vanish (up to
// optimizer tolerance) exactly when p = 2; for p != 2 the minimization metric
// is not the weighted L^2 one and they are reported as diagnostics only.
Decomposition decompose(const RadialProfile& u, const Params& P,
                        const DistanceOptions& opts = {});

}  // namespace hslab
