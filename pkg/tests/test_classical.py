import math

import numpy as np
import pytest

from orthosimplex import (
    gauss_jacobi,
    hahn_eval,
    jacobi_eval,
    jacobi_explicit_sum,
    jacobi_norm,
    jacobi_shifted_eval,
)


def test_degree_zero_is_one():
    assert jacobi_eval(0, 1.3, -0.4, 0.77) == 1.0


def test_degree_one_legendre_is_identity():
    for x in (-1.0, -0.3, 0.0, 0.9):
        assert jacobi_eval(1, 0.0, 0.0, x) == pytest.approx(x, abs=1e-15)


def test_degree_two_alpha_beta_one_at_zero():
    assert jacobi_eval(2, 1.0, 1.0, 0.0) == pytest.approx(-0.75, rel=1e-14)


def test_value_at_one_is_binomial():
    for n, alpha in [(3, 0.0), (5, 1.5), (8, -0.3)]:
        expected = math.exp(
            math.lgamma(n + alpha + 1) - math.lgamma(alpha + 1) - math.lgamma(n + 1)
        )
        assert jacobi_eval(n, alpha, 0.7, 1.0) == pytest.approx(expected, rel=1e-12)


def test_shifted_examples():
    assert jacobi_shifted_eval(1, 0.0, 0.0, 0.5) == pytest.approx(0.0, abs=1e-15)
    assert jacobi_shifted_eval(1, 0.0, 0.0, 1.0) == pytest.approx(1.0, rel=1e-15)
    # Legendre P2(2*0.3 - 1) = (3*0.16 - 1)/2
    assert jacobi_shifted_eval(2, 0.0, 0.0, 0.3) == pytest.approx(-0.26, rel=1e-13)


def test_recurrence_matches_explicit_sum():
    rng = np.random.default_rng(21)
    for _ in range(150):
        n = int(rng.integers(0, 11))
        alpha, beta = rng.uniform(-0.9, 3.0, 2)
        x = rng.uniform(-1.0, 1.0)
        a = jacobi_eval(n, alpha, beta, x)
        b = jacobi_explicit_sum(n, alpha, beta, x)
        assert a == pytest.approx(b, rel=1e-11, abs=1e-11)


def test_recurrence_matches_explicit_sum_complex():
    value = jacobi_eval(4, 0.5, 1.5, 0.3 + 0.2j)
    assert value == pytest.approx(jacobi_explicit_sum(4, 0.5, 1.5, 0.3 + 0.2j), rel=1e-12)


def test_array_evaluation():
    x = np.linspace(-1, 1, 7)
    values = jacobi_eval(3, 0.4, 1.1, x)
    for xi, vi in zip(x, values):
        assert vi == pytest.approx(jacobi_eval(3, 0.4, 1.1, float(xi)), rel=1e-14)


def test_norm_examples():
    assert jacobi_norm(0, 0.0, 0.0) == pytest.approx(2.0, rel=1e-14)
    assert jacobi_norm(1, 0.0, 0.0) == pytest.approx(2.0 / 3.0, rel=1e-14)
    # quadrature cross-check: integral of (1-x) (0.5 + 1.5x)^2 over [-1,1]
    quad = gauss_jacobi(4, 1.0, 0.0).integrate(lambda x: jacobi_eval(1, 1.0, 0.0, x) ** 2)
    assert jacobi_norm(1, 1.0, 0.0) == pytest.approx(quad, rel=1e-14)
    assert jacobi_norm(1, 1.0, 0.0) == pytest.approx(1.0, rel=1e-14)


def test_quadrature_orthogonality():
    rng = np.random.default_rng(22)
    for _ in range(5):
        alpha, beta = rng.uniform(-0.8, 2.5, 2)
        rule = gauss_jacobi(10, alpha, beta)
        for n in range(7):
            for m in range(n, 7):
                integral = rule.integrate(
                    lambda x: jacobi_eval(n, alpha, beta, x) * jacobi_eval(m, alpha, beta, x)
                )
                expected = jacobi_norm(n, alpha, beta) if n == m else 0.0
                scale = math.sqrt(jacobi_norm(n, alpha, beta) * jacobi_norm(m, alpha, beta))
                assert abs(integral - expected) <= 1e-11 * max(1.0, scale)


def test_hahn_degree_zero():
    assert hahn_eval(0, 0.5, 0.5, 0.5, 0.5, 0.3) == 1.0


def test_hahn_degree_one_half_parameters():
    assert hahn_eval(1, 0.5, 0.5, 0.5, 0.5, 0.0) == pytest.approx(0.0, abs=1e-15)
    assert hahn_eval(1, 0.5, 0.5, 0.5, 0.5, 1.0) == pytest.approx(2.0, rel=1e-14)


def test_hahn_conjugation_symmetry():
    # conj(p_n(x)) = (-1)^n p_n(-conj(x); conjugated parameters)
    rng = np.random.default_rng(23)
    for _ in range(30):
        n = int(rng.integers(0, 5))
        a, b, c, d = (complex(u, v) for u, v in rng.uniform(0.2, 1.5, (4, 2)))
        x = complex(*rng.uniform(-2.0, 2.0, 2))
        lhs = hahn_eval(n, a, b, c, d, x).conjugate()
        rhs = (-1.0) ** n * hahn_eval(
            n, a.conjugate(), b.conjugate(), c.conjugate(), d.conjugate(), -x.conjugate()
        )
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)


def test_hahn_real_parameter_self_consistency():
    # with real parameters, conj(p_n(x)) = (-1)^n p_n(-x) for real x
    rng = np.random.default_rng(24)
    for _ in range(30):
        n = int(rng.integers(0, 5))
        a, b, c, d = rng.uniform(0.2, 2.0, 4)
        x = rng.uniform(-2.0, 2.0)
        lhs = hahn_eval(n, a, b, c, d, x).conjugate()
        rhs = (-1.0) ** n * hahn_eval(n, a, b, c, d, -x)
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-12)
