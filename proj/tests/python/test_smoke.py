import math

import pytest

import hslab


@pytest.fixture(scope="module")
def P():
    return hslab.make_params(5, 2.0, 1.0)


def test_derived_constants(P):
    assert P.pstar == pytest.approx(8.0 / 3.0, rel=1e-14)
    assert P.m == pytest.approx(1.0, rel=1e-14)
    assert P.K == pytest.approx(8.0, rel=1e-14)
    assert P.gamma == 2.0


def test_bad_params_raise():
    with pytest.raises(Exception):
        hslab.make_params(3, 3.5, 0.5)  # p >= N
    with pytest.raises(Exception):
        hslab.make_params(5, 2.0, 2.5)  # beta >= p


def test_extremal_profile(P):
    vals = hslab.extremal_values(P, 1.0, [0.0, 1.0, 10.0])
    assert vals[0] > vals[1] > vals[2] > 0.0
    # scale covariance: U_lam(r) = lam^{(N-p)/p} U_1(lam r)
    a = (P.N - P.p) / P.p
    v2 = hslab.extremal_values(P, 2.0, [0.5])[0]
    v1 = hslab.extremal_values(P, 1.0, [1.0])[0]
    assert v2 == pytest.approx(2.0**a * v1, rel=1e-12)


def test_sharp_constant_positive(P):
    s = hslab.sharp_constant(P)
    assert s > 0.0 and math.isfinite(s)


def test_deficit_of_extremal_vanishes(P):
    rep = hslab.deficit_scaled_extremal(P, 1.3, 2.0)
    assert abs(rep["deficit"]) <= 1e-8 * rep["grad_p"]


def test_distance_recovers_manifold_point(P):
    res = hslab.distance_scaled_extremal(P, 1.5, 2.0)
    assert res["converged"]
    assert res["d"] <= 1e-6 * res["grad_norm"]
    assert res["c_star"] == pytest.approx(1.5, abs=1e-4)
    assert res["lambda_star"] == pytest.approx(2.0, rel=1e-3)


def test_radial_eigenvalues(P):
    vals, shifts = hslab.eigenvalues(P, 0, 2, n=900)
    assert vals[0] == pytest.approx(P.p - 1.0, rel=5e-3)
    assert vals[1] == pytest.approx(P.pstar - 1.0, rel=5e-3)
    assert len(shifts) == 2


def test_verify_scalar_suite():
    reports = hslab.verify_suite("scalar", samples=5000, seed=7)
    assert reports and all(r["violations"] == 0 for r in reports)
