#pragma once

#include <vector>

namespace hslab {

// Symmetric tridiagonal matrix with diagonal d (size n) and off-diagonal e
// (size n-1).

// Number of eigenvalues strictly below x (Sturm sequence, floored pivots).
int sturm_count_below(const std::vector<double>& d, const std::vector<double>& e,
                      double x);

// Ascending eigenvalues with 0-based indices k_lo..k_hi inclusive, each
// bisected to rel_tol * gershgorin_radius.
std::vector<double> tridiag_eigenvalues(const std::vector<double>& d,
                                        const std::vector<double>& e, int k_lo,
                                        int k_hi, double rel_tol = 1e-14);

// Unit eigenvector at lam by inverse iteration (pivoted tridiagonal solve),
// re-orthogonalized against the deflate set each sweep.
std::vector<double> tridiag_eigenvector(const std::vector<double>& d,
                                        const std::vector<double>& e, double lam,
                                        const std::vector<std::vector<double>>& deflate = {},
                                        unsigned long long seed = 0x7d1dull);

// LDL^T solve for a positive definite tridiagonal system.
std::vector<double> tridiag_spd_solve(const std::vector<double>& d,
                                      const std::vector<double>& e,
                                      std::vector<double> b);

}  // namespace hslab
