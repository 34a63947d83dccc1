#pragma once

#include <functional>
#include <vector>

namespace hslab {

struct SimplexResult {
    std::vector<double> x;
    double fval = 0.0;
    int iterations = 0;
    bool converged = false;
};

// Derivative-free minimization (reflect 1, expand 2, contract 1/2, shrink 1/2).
// Stops when the simplex f-spread falls below ftol * (|f_best| + ftol) or the
// x-spread below xtol.
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          const std::vector<double>& x0, double step,
                          double ftol = 1e-10, double xtol = 1e-9,
                          int max_iter = 500);

}  // namespace hslab
