#pragma once

#include <vector>

namespace hslab {

struct FitResult {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    double slope_stderr = 0.0;
};

// Least squares y = slope * x + intercept.  Throws DomainError on fewer than
// two points or zero x-variance.
FitResult linear_fit(const std::vector<double>& x, const std::vector<double>& y);

// linear_fit on (log x, log y); all entries must be positive.
FitResult loglog_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace hslab
