#include <cmath>

#include "doctest.h"
#include "hslab/errors.hpp"
#include "hslab/params.hpp"
#include "hslab/spectral.hpp"

using namespace hslab;

TEST_SUITE("spectral") {

TEST_CASE("zero sector recovers both closed-form eigenvalues") {
    Params P = make_params(5, 2.0, 1.0);
    SpectralResult sr = eigen_mode(P, 0, 3);
    REQUIRE(sr.eigenvalues.size() == 3);
    CHECK(sr.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sr.eigenvalues[1] == doctest::Approx(5.0 / 3.0).epsilon(2e-3));
    CHECK(sr.lambda_k == 0.0);
    CHECK(sr.refinement_shift.size() == 3);
    CHECK(std::fabs(sr.refinement_shift[0]) < 1e-3);
    CHECK(sr.grid.n == 2000);

    Params Q = make_params(4, 2.5, 1.2);
    SpectralResult sq = eigen_mode(Q, 0, 2);
    CHECK(sq.eigenvalues[0] == doctest::Approx(Q.p - 1.0).epsilon(1e-3));
    CHECK(sq.eigenvalues[1] == doctest::Approx(Q.pstar - 1.0).epsilon(2e-3));
}

TEST_CASE("eigenvectors are B-orthonormal and oscillate in order") {
    Params P = make_params(5, 2.0, 1.0);
    FemForms forms = assemble_mode(P, 0);
    SpectralResult sr = eigen_mode(P, 0, 2, {}, true);
    REQUIRE(sr.eigenvectors.size() == 2);
    REQUIRE(sr.eigenvectors[0].size() == forms.b_diag.size());

    double n00 = 0.0, n11 = 0.0, x01 = 0.0;
    for (size_t i = 0; i < forms.b_diag.size(); ++i) {
        n00 += forms.b_diag[i] * sr.eigenvectors[0][i] * sr.eigenvectors[0][i];
        n11 += forms.b_diag[i] * sr.eigenvectors[1][i] * sr.eigenvectors[1][i];
        x01 += forms.b_diag[i] * sr.eigenvectors[0][i] * sr.eigenvectors[1][i];
    }
    CHECK(n00 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(n11 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::fabs(x01) < 1e-10);

    int flips0 = 0, flips1 = 0;
    for (size_t i = 1; i < sr.nodes.size(); ++i) {
        if ((sr.eigenvectors[0][i] < 0) != (sr.eigenvectors[0][i - 1] < 0)) ++flips0;
        if ((sr.eigenvectors[1][i] < 0) != (sr.eigenvectors[1][i - 1] < 0)) ++flips1;
    }
    CHECK(flips0 == 0);
    CHECK(flips1 == 1);
}

TEST_CASE("first sector sits strictly above the neutral threshold") {
    Params P = make_params(5, 2.0, 1.0);
    SpectralResult s1 = eigen_mode(P, 1, 1);
    CHECK(s1.lambda_k == 4.0);  // angular multiplier k (N - 2 + k)
    double bottom = s1.eigenvalues[0];
    CHECK(bottom > P.pstar - 1.0 + 0.5);
    CHECK(bottom == doctest::Approx(2.5).epsilon(1e-3));

    double second = eigen_mode(P, 2, 1).eigenvalues[0];
    CHECK(second > bottom);
}

TEST_CASE("removing the weight restores the translation mode") {
    Params P = make_params(4, 2.0, 0.0);
    double bottom = eigen_mode(P, 1, 1).eigenvalues[0];
    CHECK(bottom == doctest::Approx(P.pstar - 1.0).epsilon(1e-3));
}

TEST_CASE("transformed eigenequation residuals") {
    for (auto [N, p, beta] : {std::tuple<int, double, double>{5, 2.0, 1.0},
                              {3, 1.5, 0.45}}) {
        Params P = make_params(N, p, beta);
        CHECK(analytic_residual(P, 0) < 1e-10);
        CHECK(analytic_residual(P, 1) < 1e-10);
        CHECK(analytic_residual(P, 0, P.K + 0.1) > 1e-2);
        CHECK(analytic_residual(P, 1, P.K + 0.1) > 1e-2);
    }
}

TEST_CASE("sector bound holds with margin") {
    Params P = make_params(5, 2.0, 1.0);
    SectorBound sb = sector_bound(P);
    CHECK(sb.lhs == doctest::Approx(1.75).epsilon(1e-12));
    CHECK(sb.rhs == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(sb.ok);

    CHECK(sector_bound(make_params(3, 2.5, 2.0)).ok);
    CHECK(sector_bound(make_params(4, 1.5, 0.45)).ok);
}

TEST_CASE("spectral gap report") {
    Params P = make_params(5, 2.0, 1.0);
    GapReport g = spectral_gap(P);
    CHECK(g.positive);
    CHECK(g.neutral == doctest::Approx(5.0 / 3.0).epsilon(1e-12));
    CHECK(g.mu1 == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(g.mu2 == doctest::Approx(5.0 / 3.0).epsilon(2e-3));
    CHECK(g.tau > 0.41);
    CHECK(g.tau < 0.42);
    CHECK(g.attaining_mode == 1);
    CHECK(g.mu3_eff == doctest::Approx(std::min(g.mu3, g.k1_bottom)).epsilon(1e-15));
    CHECK(g.tau == doctest::Approx(0.5 * (g.mu3_eff - g.neutral)).epsilon(1e-12));
}

TEST_CASE("grid specs are validated") {
    Params P = make_params(5, 2.0, 1.0);
    GridSpec bad1;
    bad1.r_min = -1.0;
    CHECK_THROWS_AS(assemble_mode(P, 0, bad1), GridError);
    GridSpec bad2;
    bad2.n = 10;
    CHECK_THROWS_AS(assemble_mode(P, 0, bad2), GridError);
    GridSpec bad3;
    bad3.r_min = 10.0;
    bad3.r_max = 1.0;
    CHECK_THROWS_AS(assemble_mode(P, 0, bad3), GridError);
}

TEST_CASE("assembly is deterministic on a geometric grid") {
    Params P = make_params(5, 2.0, 1.0);
    FemForms f1 = assemble_mode(P, 0);
    FemForms f2 = assemble_mode(P, 0);
    CHECK(f1.nodes == f2.nodes);
    CHECK(f1.a_diag == f2.a_diag);
    CHECK(f1.a_off == f2.a_off);
    CHECK(f1.b_diag == f2.b_diag);
    REQUIRE(f1.nodes.size() >= 2);
    CHECK(f1.a_off.size() == f1.nodes.size() - 1);
    CHECK(f1.b_diag.size() == f1.nodes.size());

    const double ratio = f1.nodes[1] / f1.nodes[0];
    for (size_t i = 1; i + 1 < f1.nodes.size(); ++i)
        CHECK(f1.nodes[i + 1] / f1.nodes[i] == doctest::Approx(ratio).epsilon(1e-12));

    // the first sector clamps the inner node as well
    FemForms g1 = assemble_mode(P, 1);
    CHECK(g1.nodes.size() == f1.nodes.size() - 1);
}

TEST_CASE("automatic outer radius follows the tail decay") {
    CHECK(default_r_max(make_params(5, 2.0, 1.0)) == 1e4);
    CHECK(default_r_max(make_params(4, 2.0, 1.0)) == 1e4);
    Params slow = make_params(3, 2.5, 0.75);
    double rm = default_r_max(slow);
    CHECK(rm == 1e12);
}

TEST_CASE("restricted mass against full energy") {
    Params P = make_params(5, 2.0, 1.0);
    double global = sup_mass_over_energy(P, 0.0, 1e30);
    CHECK(global == doctest::Approx(1.0 / (P.p - 1.0)).epsilon(1e-3));
    double ball = sup_mass_over_energy(P, 0.0, 0.1);
    double tail = sup_mass_over_energy(P, 10.0, 1e30);
    CHECK(ball > 0.0);
    CHECK(tail > 0.0);
    CHECK(ball < global);
    CHECK(tail < global);
}

}  // TEST_SUITE
