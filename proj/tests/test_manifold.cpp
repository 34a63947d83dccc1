#include <cmath>

#include "doctest.h"
#include "hslab/errors.hpp"
#include "hslab/functionals.hpp"
#include "hslab/manifold.hpp"
#include "hslab/params.hpp"
#include "hslab/profile.hpp"

using namespace hslab;

TEST_SUITE("manifold") {

TEST_CASE("recovers points of the manifold") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u = scale_profile(3.0, extremal(P, 2.0));
    DistanceResult dr = distance(u, P);
    CHECK(dr.converged);
    CHECK(dr.grad_norm > 0.0);
    CHECK(dr.d <= 1e-6 * dr.grad_norm);
    CHECK(dr.c_star == doctest::Approx(3.0).epsilon(1e-6));
    CHECK(dr.lambda_star == doctest::Approx(2.0).epsilon(1e-5));
    CHECK_FALSE(dr.on_boundary);
    CHECK_FALSE(dr.trace.empty());
}

TEST_CASE("negative amplitudes are found") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u = scale_profile(-1.2, extremal(P, 0.7));
    DistanceResult dr = distance(u, P);
    CHECK(dr.d <= 1e-6 * dr.grad_norm);
    CHECK(dr.c_star == doctest::Approx(-1.2).epsilon(1e-5));
    CHECK(dr.lambda_star == doctest::Approx(0.7).epsilon(1e-4));
}

TEST_CASE("off-manifold distance is positive") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.25}, {extremal(P, 1.0), bump_profile(1.0, 0.5)});
    DistanceResult dr = distance(u, P);
    CHECK(dr.converged);
    CHECK(dr.d > 0.01 * dr.grad_norm);
    CHECK(dr.d < dr.grad_norm);
    CHECK_FALSE(dr.on_boundary);
}

TEST_CASE("distance is dilation invariant and the scale tracks") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.2}, {extremal(P, 1.0), bump_profile(1.0, 0.5)});
    DistanceResult d1 = distance(u, P);

    // u_lam(r) = lam^{a} u(lam r) leaves the gradient p-norm unchanged
    const double lam = 2.0, amp = std::pow(lam, P.a_scale);
    RadialProfile v = u;
    v.value = [u, lam, amp](double r) { return amp * u.value(lam * r); };
    v.dvalue = [u, lam, amp](double r) { return lam * amp * u.dvalue(lam * r); };
    std::vector<double> brk;
    for (double b : u.breakpoints) brk.push_back(b / lam);
    v.breakpoints = brk;
    DistanceResult d2 = distance(v, P);

    CHECK(std::fabs(d2.d - d1.d) <= 1e-4 * d1.d);
    CHECK(d2.lambda_star / d1.lambda_star == doctest::Approx(lam).epsilon(1e-3));
}

TEST_CASE("warm start agrees with the cold search") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.25}, {extremal(P, 1.0), bump_profile(1.0, 0.5)});
    DistanceResult cold = distance(u, P);
    DistanceOptions opts;
    opts.guess_c = 1.0;
    opts.guess_lambda = 1.0;
    DistanceResult warm = distance(u, P, opts);
    CHECK(std::fabs(warm.d - cold.d) <= 1e-8 * cold.d);
    CHECK(warm.c_star == doctest::Approx(cold.c_star).epsilon(1e-6));
    CHECK(warm.lambda_star == doctest::Approx(cold.lambda_star).epsilon(1e-6));
}

TEST_CASE("axisymmetric overload agrees with the radial one") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.25}, {extremal(P, 1.0), bump_profile(1.0, 0.5)});
    DistanceResult dr = distance(u, P);
    DistanceResult da = distance(axisym_from_radial(u), P);
    CHECK(da.d == doctest::Approx(dr.d).epsilon(1e-8));
    CHECK(da.c_star == doctest::Approx(dr.c_star).epsilon(1e-8));
    CHECK(da.lambda_star == doctest::Approx(dr.lambda_star).epsilon(1e-8));
}

TEST_CASE("decomposition at p = 2 is nearly orthogonal") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.25}, {extremal(P, 1.0), bump_profile(1.0, 0.5)});
    Decomposition dec = decompose(u, P);
    CHECK(std::fabs(dec.ortho_u) < 1e-4);
    CHECK(std::fabs(dec.ortho_z) < 1e-4);
    CHECK(dec.d > 0.0);
    CHECK(std::pow(grad_pnorm(dec.w, P), 1.0 / P.p) ==
          doctest::Approx(1.0).epsilon(1e-6));

    // u = c* U_{lambda*} + d w pointwise
    RadialProfile Ustar = extremal(P, dec.lambda_star);
    for (double r : {0.1, 0.7, 1.2, 3.0, 10.0})
        CHECK(dec.c_star * Ustar(r) + dec.d * dec.w(r) ==
              doctest::Approx(u(r)).epsilon(1e-10));
}

TEST_CASE("decomposition rejects manifold points") {
    Params P = make_params(5, 2.0, 1.0);
    CHECK_THROWS_AS(decompose(extremal(P, 1.0), P), DegenerateDecomposition);
}

}  // TEST_SUITE
