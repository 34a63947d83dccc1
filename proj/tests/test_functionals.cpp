#include <cmath>

#include "doctest.h"
#include "hslab/functionals.hpp"
#include "hslab/params.hpp"
#include "hslab/profile.hpp"

using namespace hslab;

namespace {

double beta_fn(double a, double b) {
    return std::exp(std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b));
}

// closed forms for the extremal's two integrals via the Beta function
double grad_closed(const Params& P) {
    double A0 = (P.N - P.beta) * (P.p - 1.0) / (P.p - P.beta);
    return P.sphere_area * std::pow(P.cnp, P.p) / P.m *
           beta_fn(A0 + 1.0, P.K - A0 - 1.0);
}

double star_closed(const Params& P) {
    double A0 = (P.N - P.beta) * (P.p - 1.0) / (P.p - P.beta);
    return P.sphere_area * std::pow(P.Cnpb, P.pstar) / P.m *
           beta_fn(A0, P.K - A0);
}

}  // namespace

TEST_SUITE("functionals") {

TEST_CASE("unweighted quadratic case has elementary values") {
    Params P = make_params(4, 2.0, 0.0);
    RadialProfile U = extremal(P, 1.0);
    CHECK(grad_pnorm(U, P) ==
          doctest::Approx(32.0 * M_PI * M_PI / 3.0).epsilon(1e-12));
    CHECK(sharp_constant(P) ==
          doctest::Approx(8.0 * M_PI / std::sqrt(6.0)).epsilon(1e-10));
}

TEST_CASE("extremal integrals match their Beta closed forms") {
    for (auto [N, p, beta] : {std::tuple<int, double, double>{5, 2.0, 1.0},
                              {3, 1.5, 0.45},
                              {4, 2.5, 1.75}}) {
        Params P = make_params(N, p, beta);
        RadialProfile U = extremal(P, 1.0);
        CHECK(grad_pnorm(U, P) == doctest::Approx(grad_closed(P)).epsilon(1e-11));
        CHECK(weighted_starnorm(U, P) ==
              doctest::Approx(star_closed(P)).epsilon(1e-11));
    }
}

TEST_CASE("the extremal saturates the inequality on the full grid") {
    for (int N : {3, 4, 5})
        for (double p : {1.5, 2.0, 2.5})
            for (double frac : {0.3, 0.7}) {
                Params P = make_params(N, p, frac * p);
                DeficitReport rep = deficit(extremal(P, 1.0), P);
                CAPTURE(N);
                CAPTURE(p);
                CAPTURE(frac);
                CHECK(std::fabs(rep.deficit) <= 1e-12 * rep.grad_p);
            }
}

TEST_CASE("deficit vanishes along the scaled manifold") {
    Params P = make_params(4, 1.5, 0.5);
    for (auto [c, lam] : {std::pair<double, double>{1.3, 0.7}, {-0.8, 2.5}}) {
        DeficitReport rep = deficit(scale_profile(c, extremal(P, lam)), P);
        CHECK(std::fabs(rep.deficit) <= 1e-10 * rep.grad_p);
    }
}

TEST_CASE("deficit is positive off the manifold") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.3}, {extremal(P, 1.0), bump_profile(1.0, 0.5)});
    DeficitReport rep = deficit(u, P);
    CHECK(rep.deficit > 0.0);
    CHECK(rep.deficit > 1e-8 * rep.grad_p);
}

TEST_CASE("deficit report is internally consistent") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile u =
        lincomb({1.0, 0.2}, {extremal(P, 1.0), bump_profile(2.0, 0.7)});
    DeficitReport rep = deficit(u, P);
    CHECK(rep.star_p ==
          doctest::Approx(std::pow(rep.star_int, P.p / P.pstar)).epsilon(1e-14));
    CHECK(rep.deficit ==
          doctest::Approx(rep.grad_p - rep.sharp * rep.star_p).epsilon(1e-12));
    CHECK(rep.sharp == doctest::Approx(sharp_constant(P)).epsilon(1e-12));
    CHECK(rep.quad_error >= 0.0);
    CHECK(rep.proved_regime == P.proved_regime);

    Params Q = make_params(4, 2.0, 0.0);
    CHECK_FALSE(deficit(extremal(Q, 1.0), Q).proved_regime);
}

TEST_CASE("quadratic form recovers the zero-sector eigenvalues") {
    for (auto [N, p, beta] : {std::tuple<int, double, double>{5, 2.0, 1.0},
                              {3, 1.5, 0.45}}) {
        Params P = make_params(N, p, beta);
        auto [U, Z] = tangent_basis(P, 1.0);
        FormPair fu = quadratic_form(U, 0, P);
        CHECK(fu.A / fu.B == doctest::Approx(P.p - 1.0).epsilon(1e-6));
        FormPair fz = quadratic_form(Z, 0, P);
        CHECK(fz.A / fz.B == doctest::Approx(P.pstar - 1.0).epsilon(1e-6));
    }
}

TEST_CASE("quadratic form scaling and sector monotonicity") {
    Params P = make_params(5, 2.0, 1.0);
    RadialProfile v = bump_profile(1.0, 0.6);
    FormPair f1 = quadratic_form(v, 0, P);
    FormPair f2 = quadratic_form(scale_profile(2.0, v), 0, P);
    CHECK(f2.A == doctest::Approx(4.0 * f1.A).epsilon(1e-10));
    CHECK(f2.B == doctest::Approx(4.0 * f1.B).epsilon(1e-10));

    FormPair g1 = quadratic_form(v, 1, P);
    FormPair g2 = quadratic_form(v, 2, P);
    CHECK(g1.B == doctest::Approx(f1.B).epsilon(1e-12));
    CHECK(g1.A > f1.A);
    CHECK(g2.A > g1.A);
    // the sector shift is k (N - 2 + k) times one fixed integral
    double shift1 = g1.A - f1.A, shift2 = g2.A - f1.A;
    CHECK(shift2 / shift1 == doctest::Approx(2.0 * (P.N + 0.0) / (P.N - 1.0)).epsilon(1e-9));
}

}  // TEST_SUITE
