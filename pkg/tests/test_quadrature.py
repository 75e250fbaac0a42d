import math

import numpy as np
import pytest
from scipy.special import roots_jacobi

from orthosimplex import (
    BudgetInfeasibleError,
    ParameterRangeError,
    gauss_jacobi,
    gauss_jacobi_unit,
    h_norm,
    line_rule,
    multi_indices,
    simplex_poly_eval,
    simplex_rule,
)


def jacobi_moment(alpha, beta, k):
    """Independent moment oracle: integral of (1-x)^a (1+x)^b x^k over [-1,1].

    Binomial expansion in high precision (the alternating sum cancels
    heavily for large k, so double precision would pollute the oracle).
    """
    import mpmath

    with mpmath.workdps(40):
        a, b = mpmath.mpf(float(alpha)), mpmath.mpf(float(beta))
        total = mpmath.mpf(0)
        for j in range(k + 1):
            total += (
                mpmath.binomial(k, j)
                * mpmath.mpf(2) ** j
                * (-1) ** (k - j)
                * mpmath.beta(b + 1 + j, a + 1)
            )
        return float(mpmath.mpf(2) ** (a + b + 1) * total)


def test_one_point_legendre():
    rule = gauss_jacobi(1, 0.0, 0.0)
    assert rule.nodes[0] == pytest.approx(0.0, abs=1e-15)
    assert rule.weights[0] == pytest.approx(2.0, rel=1e-15)


def test_two_point_legendre_integrates_x2():
    rule = gauss_jacobi(2, 0.0, 0.0)
    assert rule.integrate(lambda x: x**2) == pytest.approx(2.0 / 3.0, rel=1e-14)


def test_one_point_alpha1():
    rule = gauss_jacobi(1, 1.0, 0.0)
    assert rule.nodes[0] == pytest.approx(-1.0 / 3.0, rel=1e-14)
    assert rule.weights[0] == pytest.approx(2.0, rel=1e-14)


def test_weight_sum_is_total_mass():
    rng = np.random.default_rng(5)
    for _ in range(20):
        alpha, beta = rng.uniform(-0.9, 3.0, 2)
        n = int(rng.integers(1, 30))
        rule = gauss_jacobi(n, alpha, beta)
        assert rule.weights.sum() == pytest.approx(jacobi_moment(alpha, beta, 0), rel=1e-13)
        assert (rule.weights > 0).all()


def test_exactness_to_declared_degree():
    rng = np.random.default_rng(6)
    for _ in range(20):
        alpha, beta = rng.uniform(-0.9, 3.0, 2)
        n = int(rng.integers(1, 12))
        rule = gauss_jacobi(n, alpha, beta)
        mass = jacobi_moment(alpha, beta, 0)
        for k in range(2 * n):
            quad = rule.integrate(lambda x: x**k)
            assert quad == pytest.approx(jacobi_moment(alpha, beta, k), rel=1e-13, abs=1e-13 * mass)


def test_symmetric_weight_gives_symmetric_nodes():
    rule = gauss_jacobi(9, 0.7, 0.7)
    assert np.allclose(rule.nodes, -rule.nodes[::-1], atol=1e-14)


def test_matches_scipy_reference():
    for n, alpha, beta in [(5, 0.0, 0.0), (12, 1.5, -0.4), (30, 2.0, 0.25)]:
        rule = gauss_jacobi(n, alpha, beta)
        x_ref, w_ref = roots_jacobi(n, alpha, beta)
        assert np.allclose(rule.nodes, x_ref, atol=1e-12)
        assert np.allclose(rule.weights, w_ref, rtol=1e-11)


def test_unit_interval_rule():
    rule = gauss_jacobi_unit(4, 0.5, 1.5)
    # mass of u^0.5 (1-u)^1.5 on [0,1] is B(1.5, 2.5)
    expected = math.exp(math.lgamma(1.5) + math.lgamma(2.5) - math.lgamma(4.0))
    assert rule.weights.sum() == pytest.approx(expected, rel=1e-13)
    assert ((rule.nodes > 0) & (rule.nodes < 1)).all()


def test_parameter_range_errors():
    with pytest.raises(ParameterRangeError):
        gauss_jacobi(4, -1.0, 0.0)
    with pytest.raises(ParameterRangeError):
        gauss_jacobi(0, 0.0, 0.0)
    with pytest.raises(ParameterRangeError):
        simplex_rule(2, 4, (0.0, -1.2, 0.0))


def test_simplex_constant_r1():
    rule = simplex_rule(1, 2, (0.0, 0.0))
    assert rule.integrate(lambda x: np.ones(len(x))) == pytest.approx(1.0, rel=1e-14)


def test_simplex_constant_r2():
    rule = simplex_rule(2, 2, (0.0, 0.0, 0.0))
    assert rule.integrate(lambda x: np.ones(len(x))) == pytest.approx(0.5, rel=1e-14)


def test_simplex_linear_moment_r2():
    rule = simplex_rule(2, 3, (0.0, 0.0, 0.0))
    assert rule.integrate(lambda x: x[:, 0]) == pytest.approx(1.0 / 6.0, rel=1e-13)


def test_simplex_nodes_strictly_inside():
    rule = simplex_rule(3, 6, (0.5, -0.25, 1.0, 0.0))
    assert (rule.nodes > 0).all()
    assert (rule.nodes.sum(axis=1) < 1.0).all()
    assert (rule.weights > 0).all()


def test_simplex_rule_reproduces_norms():
    # cross-module oracle: quadrature diagonal equals the closed-form norm
    rng = np.random.default_rng(7)
    for r in (1, 2, 3):
        for _ in range(3):
            alpha = rng.uniform(-0.5, 2.0, r + 1)
            rule = simplex_rule(r, 8, alpha)
            for n in multi_indices(r, 4):
                quad = rule.integrate(lambda pts: simplex_poly_eval(n, alpha, pts) ** 2)
                assert quad == pytest.approx(h_norm(n, alpha), rel=1e-10)


def test_line_rule_sech_squared():
    rule = line_rule(2.0, 1e-10, core_radius=2.0, amplitude=4.0)
    value = rule.integrate(lambda x: 1.0 / np.cosh(x) ** 2)
    assert value == pytest.approx(2.0, abs=1e-10)


def test_line_rule_scaled_sech_squared():
    rule = line_rule(math.pi, 1e-10, core_radius=2.0, amplitude=4.0)
    value = rule.integrate(lambda x: 1.0 / np.cosh(math.pi * x / 2.0) ** 2)
    assert value == pytest.approx(4.0 / math.pi, abs=1e-10)


def test_line_rule_gaussian():
    rule = line_rule(2.0, 1e-11, core_radius=3.0, amplitude=60.0)
    value = rule.integrate(lambda x: np.exp(-(x**2)))
    assert value == pytest.approx(math.sqrt(math.pi), abs=1e-11)


def test_line_rule_budget_cap():
    with pytest.raises(BudgetInfeasibleError):
        line_rule(1e-3, 1e-12, max_points=1000)


def test_doubling_stability():
    alpha, beta = 0.8, -0.3
    f = lambda x: np.exp(x) * np.cos(2 * x)
    coarse = gauss_jacobi(20, alpha, beta).integrate(f)
    fine = gauss_jacobi(40, alpha, beta).integrate(f)
    assert abs(coarse - fine) < 1e-13 * max(1.0, abs(fine))
