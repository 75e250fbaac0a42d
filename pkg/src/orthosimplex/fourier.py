"""The tanh-warped simplex functions and their closed-form Fourier transforms.

Each warped function is a product of (1 +- tanh x_j) powers times a
simplex basis polynomial evaluated at warped coordinates; its Fourier
transform factors per axis into a Beta factor times a terminating 3F2
(equivalently a continuous Hahn polynomial).  A quadrature oracle
computes the same transform by per-axis numerical integration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classical import hahn_eval, jacobi_eval
from .errors import DimensionMismatchError, ParameterRangeError
from .hypergeom import hyp3f2
from .numerics import beta as beta_fn
from .numerics import pochhammer
from .quadrature import line_rule
from .reports import VerificationReport, make_report
from .simplex import simplex_poly_eval, tail_sum


def tanh_pair(x):
    """(1 + tanh x, 1 - tanh x) without cancellation in the tails.

    1 + tanh x = 2 / (1 + exp(-2x)) stays accurate down to the underflow
    threshold, where the naive form is exactly 0 for x < -19 or so.
    """
    x = np.asarray(x, dtype=float)
    plus = 2.0 / (1.0 + np.exp(np.clip(-2.0 * x, -700.0, 700.0)))
    minus = 2.0 / (1.0 + np.exp(np.clip(2.0 * x, -700.0, 700.0)))
    return plus, minus


@dataclass(frozen=True)
class GParams:
    """Dimension, multi-index, positive exponent vector a, and simplex exponents."""

    r: int
    n: tuple
    a: tuple
    alpha: tuple

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "alpha", tuple(float(v) for v in self.alpha))
        if len(self.n) != self.r:
            raise DimensionMismatchError(f"n must have {self.r} entries")
        if len(self.a) != self.r + 1 or len(self.alpha) != self.r + 1:
            raise DimensionMismatchError(f"a and alpha must have {self.r + 1} entries")
        if any(v < 0 for v in self.n):
            raise ParameterRangeError("multi-index entries must be non-negative")
        if any(v <= 0.0 for v in self.a):
            raise ParameterRangeError("a entries must be positive")


def warped_coordinates(x: Sequence[float]) -> np.ndarray:
    """Map real coordinates into the simplex: first axis (1+tanh)/2, then
    cumulative products of (1-tanh) factors."""
    x = np.asarray(x, dtype=float)
    plus, minus = tanh_pair(x)
    r = x.shape[-1]
    coords = np.empty_like(x)
    lead = np.ones_like(x[..., 0])
    for j in range(r):
        coords[..., j] = lead * plus[..., j] / 2.0
        lead = lead * minus[..., j] / 2.0
    return coords


def g_eval(p: GParams, x) -> float | np.ndarray:
    """Warped weighted polynomial at real point(s) x ((r,) or (N, r))."""
    xv = np.asarray(x, dtype=float)
    single = xv.ndim == 1
    x2 = np.atleast_2d(xv)
    if x2.shape[1] != p.r:
        raise DimensionMismatchError(f"x must have {p.r} coordinates")
    plus, minus = tanh_pair(x2)
    powers = np.ones(x2.shape[0])
    for j in range(1, p.r + 1):
        powers *= plus[:, j - 1] ** p.a[j - 1]
        powers *= minus[:, j - 1] ** tail_sum(p.a, j + 1)
    poly = simplex_poly_eval(p.n, p.alpha, warped_coordinates(x2))
    poly = np.atleast_1d(poly)
    out = powers * poly
    return float(out[0]) if single else out


def g_factored_eval(p: GParams, x) -> float | np.ndarray:
    """Equivalent per-axis product form of :func:`g_eval`.

    The simplex polynomial at warped coordinates collapses into one
    univariate Jacobi factor per axis; this form underlies both the
    closed-form transform and the quadrature oracle.
    """
    xv = np.asarray(x, dtype=float)
    single = xv.ndim == 1
    x2 = np.atleast_2d(xv)
    t2 = np.tanh(x2)
    plus, minus = tanh_pair(x2)
    value = np.full(x2.shape[0], 2.0 ** -sum((j - 1) * p.n[j - 1] for j in range(1, p.r + 1)))
    for j in range(1, p.r + 1):
        nj = p.n[j - 1]
        a_exp = p.a[j - 1]
        b_exp = tail_sum(p.a, j + 1) + tail_sum(p.n, j + 1)
        jac_a = 2.0 * tail_sum(p.n, j + 1) + tail_sum(p.alpha, j + 1) + (p.r - j)
        value = value * plus[:, j - 1] ** a_exp * minus[:, j - 1] ** b_exp
        value = value * jacobi_eval(nj, jac_a, p.alpha[j - 1], t2[:, j - 1])
    return float(value[0]) if single else value


def reduced_params(p: GParams) -> GParams:
    """Drop the last axis, folding its exponents and index into the tail."""
    if p.r < 2:
        raise ParameterRangeError("reduction requires r >= 2")
    r = p.r - 1
    n_last = p.n[-1]
    a = p.a[:r] + (p.a[r] + p.a[r + 1] + n_last,)
    alpha = p.alpha[:r] + (p.alpha[r] + p.alpha[r + 1] + 2.0 * n_last + 1.0,)
    return GParams(r, p.n[:r], a, alpha)


def g_recursion_check(p: GParams, x, tolerance: float = 1e-11) -> VerificationReport:
    """One-step reduction identity: the rank-r value equals the rank-(r-1)
    value at shifted parameters times an explicit last-axis factor."""
    x = np.asarray(x, dtype=float)
    lhs = g_eval(p, x)
    n_last = p.n[-1]
    plus, minus = tanh_pair(x[-1])
    factor = (
        2.0 ** (-(p.r - 1) * n_last)
        * float(plus) ** p.a[p.r - 1]
        * float(minus) ** p.a[p.r]
        * jacobi_eval(n_last, p.alpha[p.r], p.alpha[p.r - 1], math.tanh(x[-1]))
    )
    rhs = factor * g_eval(reduced_params(p), x[:-1])
    denom = max(abs(lhs), abs(rhs), 1e-300)
    residual = abs(lhs - rhs) / denom
    report = make_report(
        "g-recursion",
        {"r": p.r, "n": list(p.n), "a": list(p.a), "alpha": list(p.alpha), "x": x.tolist()},
        lhs,
        rhs,
        tolerance,
    )
    report.rel_residual = residual
    report.passed = residual <= tolerance
    return report


def lambda_factor(j: int, p: GParams, xi_j: float, form: str = "3f2") -> complex:
    """Per-axis closed-form transform factor: Beta factor times terminating 3F2,
    or the equivalent continuous-Hahn expression."""
    if not 1 <= j <= p.r:
        raise ParameterRangeError(f"axis index {j} outside 1..{p.r}")
    nj = p.n[j - 1]
    ntail = tail_sum(p.n, j + 1)
    a_tail = tail_sum(p.a, j + 1)
    a_head = tail_sum(p.a, j)
    alpha_tail = tail_sum(p.alpha, j + 1)
    alpha_head = tail_sum(p.alpha, j)
    bfac = beta_fn(p.a[j - 1] - 0.5j * xi_j, ntail + a_tail + 0.5j * xi_j)
    if form == "3f2":
        series = hyp3f2(
            (
                -nj,
                nj + 2.0 * ntail + alpha_head + (p.r - j) + 1.0,
                ntail + a_tail + 0.5j * xi_j,
            ),
            (2.0 * ntail + alpha_tail + (p.r - j) + 1.0, ntail + a_head),
            1.0,
        )
        return bfac * series
    if form == "hahn":
        hahn = hahn_eval(
            nj,
            ntail + a_tail,
            p.alpha[j - 1] - p.a[j - 1] + 1.0,
            ntail + alpha_tail - a_tail + (p.r - j) + 1.0,
            p.a[j - 1],
            0.5 * xi_j,
        )
        denom = (
            1j**nj
            * pochhammer(ntail + a_head, nj)
            * pochhammer(2.0 * ntail + alpha_tail + (p.r - j) + 1.0, nj)
        )
        return math.factorial(nj) * bfac / denom * hahn
    raise ParameterRangeError(f"unknown form {form!r}")


def _prefactor_exponent(p: GParams) -> float:
    # r(a_r + a_{r+1} - 1) + sum_{j<r} j a_j
    expo = p.r * (p.a[p.r - 1] + p.a[p.r] - 1.0)
    expo += sum(j * p.a[j - 1] for j in range(1, p.r))
    return expo


def ft_closed_form(p: GParams, xi, form: str = "3f2") -> complex:
    """Closed-form Fourier transform: power-of-two prefactor times the
    product over axes of a Pochhammer ratio and the per-axis factor."""
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (p.r,):
        raise DimensionMismatchError(f"xi must have {p.r} entries")
    value = 2.0 ** _prefactor_exponent(p)
    for j in range(1, p.r + 1):
        nj = p.n[j - 1]
        ntail = tail_sum(p.n, j + 1)
        alpha_tail = tail_sum(p.alpha, j + 1)
        value *= pochhammer(2.0 * ntail + alpha_tail + (p.r - j) + 1.0, nj) / math.factorial(nj)
        value *= lambda_factor(j, p, float(xi[j - 1]), form=form)
    return value


def _axis_integrand(p: GParams, j: int, xi_j: float):
    nj = p.n[j - 1]
    a_exp = p.a[j - 1]
    b_exp = tail_sum(p.a, j + 1) + tail_sum(p.n, j + 1)
    jac_a = 2.0 * tail_sum(p.n, j + 1) + tail_sum(p.alpha, j + 1) + (p.r - j)
    jac_b = p.alpha[j - 1]

    def f(x):
        plus, minus = tanh_pair(x)
        return (
            np.exp(-1j * xi_j * x)
            * plus**a_exp
            * minus**b_exp
            * jacobi_eval(nj, jac_a, jac_b, np.tanh(x))
        )

    return f, 2.0 * min(a_exp, b_exp)


def ft_numeric_axis(p: GParams, j: int, xi_j: float, tolerance: float = 1e-9) -> complex:
    """One axis of the transform integrated on the line.

    The integrand decays like exp(-2 min(A, B) |x|); amplitude for the
    truncation budget is estimated by sampling the decay-compensated
    magnitude.
    """
    f, decay = _axis_integrand(p, j, xi_j)
    probes = np.linspace(-8.0, 8.0, 9)
    amplitude = float(np.max(np.abs(f(probes)) * np.exp(decay * np.abs(probes))))
    rule = line_rule(decay, tolerance, core_radius=2.0, amplitude=max(amplitude, 1.0))
    return complex(rule.integrate(f))


def ft_numeric(p: GParams, xi, tolerance: float = 1e-9) -> complex:
    """Quadrature oracle for the transform.

    The warped function is an exact per-axis product (times a power of
    two), so the r-dimensional integral is the product of r line
    integrals, each computed to tolerance/r.
    """
    xi = np.asarray(xi, dtype=float)
    if xi.shape != (p.r,):
        raise DimensionMismatchError(f"xi must have {p.r} entries")
    axis_tol = tolerance / p.r
    value = 2.0 ** -sum((j - 1) * p.n[j - 1] for j in range(1, p.r + 1))
    for j in range(1, p.r + 1):
        value *= ft_numeric_axis(p, j, float(xi[j - 1]), axis_tol)
    return value


def ft_recursion_check(p: GParams, xi, tolerance: float = 1e-10) -> VerificationReport:
    """Closed-form one-step reduction: rank-r transform equals an explicit
    last-axis factor times the rank-(r-1) transform at shifted parameters."""
    xi = np.asarray(xi, dtype=float)
    lhs = ft_closed_form(p, xi)
    n_last = p.n[-1]
    xi_last = float(xi[-1])
    factor = (
        2.0 ** (p.a[p.r - 1] + p.a[p.r] - (p.r - 1) * n_last - 1.0)
        * pochhammer(p.alpha[p.r] + 1.0, n_last)
        / math.factorial(n_last)
        * beta_fn(p.a[p.r - 1] - 0.5j * xi_last, p.a[p.r] + 0.5j * xi_last)
        * hyp3f2(
            (-n_last, n_last + p.alpha[p.r - 1] + p.alpha[p.r] + 1.0, p.a[p.r] + 0.5j * xi_last),
            (p.alpha[p.r] + 1.0, p.a[p.r - 1] + p.a[p.r]),
            1.0,
        )
    )
    rhs = factor * ft_closed_form(reduced_params(p), xi[:-1])
    denom = max(abs(lhs), abs(rhs), 1e-300)
    residual = abs(lhs - rhs) / denom
    report = make_report(
        "ft-recursion",
        {"r": p.r, "n": list(p.n), "a": list(p.a), "alpha": list(p.alpha), "xi": xi.tolist()},
        lhs,
        rhs,
        tolerance,
    )
    report.rel_residual = residual
    report.passed = residual <= tolerance
    return report
