#pragma once

#include <vector>

namespace hslab {

// Nodes and weights of the n-point Gauss-Jacobi rule on [-1, 1] with weight
// (1-x)^a (1+x)^b, via Golub-Welsch.  Nodes ascending.
void gauss_jacobi(int n, double a, double b, std::vector<double>& x,
                  std::vector<double>& w);

inline void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    gauss_jacobi(n, 0.0, 0.0, x, w);
}

// Eigen-decomposition of a symmetric tridiagonal matrix (diag d, offdiag e)
// by the implicit-shift QL sweep; fills eigenvalues into d (ascending) and,
// when first_row is non-null, the first component of each normalized
// eigenvector.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e,
                std::vector<double>* first_row);

}  // namespace hslab
