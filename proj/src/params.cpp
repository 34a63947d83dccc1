#include "hslab/params.hpp"

#include <cmath>
#include <string>

namespace hslab {

double unit_sphere_area(int dim) {
    const double half = 0.5 * dim;
    return 2.0 * std::exp(half * std::log(M_PI) - std::lgamma(half));
}

Params make_params(int N, double p, double beta) {
    if (!(p > 1.0))
        throw DomainError("make_params: need p > 1, got p = " + std::to_string(p));
    if (!(p < N))
        throw DomainError("make_params: need p < N, got p = " + std::to_string(p) +
                          ", N = " + std::to_string(N));
    if (!(beta >= 0.0))
        throw DomainError("make_params: need beta >= 0, got beta = " + std::to_string(beta));
    if (!(beta < p))
        throw DomainError("make_params: need beta < p, got beta = " + std::to_string(beta) +
                          ", p = " + std::to_string(p));

    Params P;
    P.N = N;
    P.p = p;
    P.beta = beta;
    P.pstar = p * (N - beta) / (N - p);
    P.m = (p - beta) / (p - 1.0);
    P.q = p / (p - beta);
    P.K = p * (N - beta) / (p - beta);
    P.a_scale = (N - p) / p;
    P.b_exp = (N - p) / (p - beta);
    P.gamma_exp = std::max(p, 2.0);
    P.Cnpb = std::pow((N - beta) * std::pow((N - p) / (p - 1.0), p - 1.0),
                      (N - p) / (p * (p - beta)));
    P.cnp = P.Cnpb * (N - p) / (p - 1.0);
    P.sphere_area = unit_sphere_area(N);
    P.sphere_area_sub = unit_sphere_area(N - 1);
    P.proved_regime = beta > 0.0;
    P.cache = std::make_shared<Params::Cache>();
    return P;
}

}  // namespace hslab
