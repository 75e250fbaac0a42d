import math

import numpy as np
import pytest

from orthosimplex import (
    GParams,
    ParameterRangeError,
    ft_closed_form,
    ft_numeric,
    ft_numeric_axis,
    ft_recursion_check,
    g_eval,
    g_factored_eval,
    g_recursion_check,
    hyp3f2,
    lambda_factor,
)
from orthosimplex.fourier import tanh_pair, warped_coordinates
from orthosimplex.numerics import beta as beta_fn


def test_g_trivial_at_origin():
    p = GParams(1, (0,), (1.0, 1.0), (0.3, 0.8))
    assert g_eval(p, [0.0]) == pytest.approx(1.0, rel=1e-14)


def test_g_sech_squared_value():
    p = GParams(1, (0,), (1.0, 1.0), (0.0, 0.0))
    assert g_eval(p, [1.0]) == pytest.approx(1.0 / math.cosh(1.0) ** 2, rel=1e-13)


def test_g_bivariate_origin():
    p = GParams(2, (0, 0), (1.0, 1.0, 1.0), (0.0, 0.0, 0.0))
    assert g_eval(p, [0.0, 0.0]) == pytest.approx(1.0, rel=1e-14)


def test_positive_exponents_required():
    with pytest.raises(ParameterRangeError):
        GParams(1, (0,), (0.0, 1.0), (0.0, 0.0))


def test_tanh_pair_is_cancellation_free():
    plus, minus = tanh_pair(np.array([-25.0, 0.0, 25.0]))
    assert plus[0] == pytest.approx(2.0 * math.exp(-50.0), rel=1e-12)
    assert plus[1] == 1.0 and minus[1] == 1.0
    assert minus[2] == pytest.approx(2.0 * math.exp(-50.0), rel=1e-12)


def test_warped_coordinates_land_in_simplex():
    rng = np.random.default_rng(41)
    x = rng.uniform(-4, 4, size=(50, 3))
    u = warped_coordinates(x)
    assert (u > 0).all()
    assert (u.sum(axis=1) < 1).all()


def test_factored_form_matches_definition():
    rng = np.random.default_rng(42)
    for _ in range(25):
        r = int(rng.integers(1, 4))
        n = tuple(int(v) for v in rng.integers(0, 4, size=r))
        a = tuple(float(v) for v in rng.uniform(0.3, 2.0, size=r + 1))
        alpha = tuple(float(v) for v in rng.uniform(-0.5, 2.0, size=r + 1))
        p = GParams(r, n, a, alpha)
        x = rng.uniform(-3, 3, size=r)
        direct = g_eval(p, x)
        factored = g_factored_eval(p, x)
        assert factored == pytest.approx(direct, rel=1e-12, abs=1e-12)


def test_g_recursion_identity():
    rng = np.random.default_rng(43)
    for _ in range(20):
        r = int(rng.integers(2, 4))
        n = tuple(int(v) for v in rng.integers(0, 3, size=r))
        a = tuple(float(v) for v in rng.uniform(0.3, 2.0, size=r + 1))
        alpha = tuple(float(v) for v in rng.uniform(-0.5, 2.0, size=r + 1))
        p = GParams(r, n, a, alpha)
        report = g_recursion_check(p, rng.uniform(-2, 2, size=r))
        assert report.passed, report.rel_residual


def test_g_recursion_trivial_last_index():
    p = GParams(2, (2, 0), (0.8, 1.1, 0.9), (0.2, 0.4, 0.6))
    report = g_recursion_check(p, [0.5, -1.0])
    assert report.rel_residual < 1e-14


def test_lambda_trivial_is_beta_factor():
    p = GParams(2, (1, 0), (0.9, 1.2, 0.7), (0.1, 0.4, 0.2))
    xi = 1.3
    # last axis has zero degree and empty tails: plain Beta factor
    expected = beta_fn(p.a[1] - 0.5j * xi, p.a[2] + 0.5j * xi)
    assert lambda_factor(2, p, xi) == pytest.approx(expected, rel=1e-14)


def test_lambda_univariate_specialisation():
    # hand-coded one-dimensional factor
    a1, a2, al1, al2, n, xi = 1.3, 0.8, 0.5, 1.1, 2, -1.7
    p = GParams(1, (n,), (a1, a2), (al1, al2))
    expected = beta_fn(a1 - 0.5j * xi, a2 + 0.5j * xi) * hyp3f2(
        (-n, a2 + 0.5j * xi, n + al1 + al2 + 1.0), (al2 + 1.0, a1 + a2), 1.0
    )
    assert lambda_factor(1, p, xi) == pytest.approx(expected, rel=1e-13)


def test_lambda_bivariate_first_axis_specialisation():
    # hand-coded first-axis factor of the two-dimensional transform
    a = (1.1, 0.7, 1.4)
    al = (0.3, 0.9, -0.2)
    n = (2, 1)
    xi = 2.4
    p = GParams(2, n, a, al)
    expected = beta_fn(a[0] - 0.5j * xi, n[1] + a[1] + a[2] + 0.5j * xi) * hyp3f2(
        (
            -n[0],
            n[0] + 2 * n[1] + al[0] + al[1] + al[2] + 2.0,
            n[1] + a[1] + a[2] + 0.5j * xi,
        ),
        (2 * n[1] + al[1] + al[2] + 2.0, n[1] + a[0] + a[1] + a[2]),
        1.0,
    )
    assert lambda_factor(1, p, xi) == pytest.approx(expected, rel=1e-13)


def test_lambda_form_equivalence_sweep():
    rng = np.random.default_rng(44)
    for _ in range(40):
        r = int(rng.integers(1, 3))
        n = tuple(int(v) for v in rng.integers(0, 4, size=r))
        a = tuple(float(v) for v in rng.uniform(0.5, 2.0, size=r + 1))
        alpha = tuple(float(v) for v in rng.uniform(-0.5, 2.0, size=r + 1))
        p = GParams(r, n, a, alpha)
        j = int(rng.integers(1, r + 1))
        xi = float(rng.choice([-3.0, -1.0, 0.0, 1.0, 3.0]))
        one = lambda_factor(j, p, xi, form="3f2")
        two = lambda_factor(j, p, xi, form="hahn")
        assert abs(one - two) <= 1e-11 * max(abs(one), abs(two), 1e-300)


def test_closed_form_spot_values():
    p = GParams(1, (0,), (1.0, 1.0), (0.0, 0.0))
    assert ft_closed_form(p, [0.0]) == pytest.approx(2.0, rel=1e-12)
    # antiderivative of sech^2 gives 2; reflection-formula value at xi = 2
    assert ft_closed_form(p, [2.0]) == pytest.approx(2.0 * math.pi / math.sinh(math.pi), rel=1e-12)
    p2 = GParams(2, (0, 0), (1.0, 1.0, 1.0), (0.0, 0.0, 0.0))
    assert ft_closed_form(p2, [0.0, 0.0]) == pytest.approx(4.0, rel=1e-12)


def test_numeric_matches_closed_on_spot_values():
    p = GParams(1, (0,), (1.0, 1.0), (0.0, 0.0))
    assert ft_numeric(p, [0.0]) == pytest.approx(2.0, abs=1e-9)
    p2 = GParams(2, (0, 0), (1.0, 1.0, 1.0), (0.0, 0.0, 0.0))
    assert ft_numeric(p2, [0.0, 0.0]) == pytest.approx(4.0, abs=1e-8)


def test_numeric_matches_closed_generic():
    p = GParams(1, (2,), (1.5, 0.7), (0.3, 1.2), )
    closed = ft_closed_form(p, [3.0])
    numeric = ft_numeric(p, [3.0], tolerance=1e-9)
    assert abs(closed - numeric) <= 1e-8 * (1.0 + abs(closed))


def test_numeric_axis_product_structure():
    p = GParams(2, (1, 2), (0.8, 1.3, 0.6), (0.4, -0.2, 1.0))
    xi = (1.0, -3.0)
    tol = 1e-9
    prefactor = 2.0 ** -(1 * p.n[1])
    product = (
        prefactor
        * ft_numeric_axis(p, 1, xi[0], tol / p.r)
        * ft_numeric_axis(p, 2, xi[1], tol / p.r)
    )
    assert product == pytest.approx(ft_numeric(p, xi, tolerance=tol), rel=1e-13)


def test_hermitian_symmetry():
    rng = np.random.default_rng(45)
    for _ in range(20):
        r = int(rng.integers(1, 3))
        n = tuple(int(v) for v in rng.integers(0, 4, size=r))
        a = tuple(float(v) for v in rng.uniform(0.5, 2.0, size=r + 1))
        alpha = tuple(float(v) for v in rng.uniform(-0.5, 2.0, size=r + 1))
        p = GParams(r, n, a, alpha)
        xi = rng.uniform(-3, 3, size=r)
        one = ft_closed_form(p, xi)
        two = ft_closed_form(p, -xi)
        assert one.conjugate() == pytest.approx(two, rel=1e-12, abs=1e-12)


def test_recursion_consistency_closed_form():
    rng = np.random.default_rng(46)
    for _ in range(20):
        r = int(rng.integers(2, 4))
        n = tuple(int(v) for v in rng.integers(0, 3, size=r))
        a = tuple(float(v) for v in rng.uniform(0.5, 2.0, size=r + 1))
        alpha = tuple(float(v) for v in rng.uniform(-0.5, 2.0, size=r + 1))
        p = GParams(r, n, a, alpha)
        report = ft_recursion_check(p, rng.uniform(-3, 3, size=r))
        assert report.passed, report.rel_residual
