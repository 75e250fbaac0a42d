"""Multivariate orthogonal functions with Gamma-product weights on the real line.

The family is a per-axis product of a Pochhammer factor and a terminating
3F2 whose parameters are driven by tail sums of the index and of the two
positive parameter vectors.  Orthogonality holds against a product of
four Gamma factors per axis; the check below exploits the exact per-axis
separability of both the weight and the functions, reducing the
r-dimensional integral to a product of r line integrals.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .classical import hahn_eval
from .errors import DimensionMismatchError, ParameterRangeError
from .hypergeom import hyp3f2
from .numerics import log_gamma_complex, log_gamma_right_array, pochhammer
from .quadrature import line_rule
from .reports import VerificationReport, make_report
from .simplex import h_norm, tail_sum


@dataclass(frozen=True)
class SParams:
    """Dimension, multi-index, and the two positive parameter vectors."""

    r: int
    n: tuple
    a: tuple
    b: tuple

    def __post_init__(self):
        object.__setattr__(self, "n", tuple(int(v) for v in self.n))
        object.__setattr__(self, "a", tuple(float(v) for v in self.a))
        object.__setattr__(self, "b", tuple(float(v) for v in self.b))
        if len(self.n) != self.r:
            raise DimensionMismatchError(f"n must have {self.r} entries")
        if len(self.a) != self.r + 1 or len(self.b) != self.r + 1:
            raise DimensionMismatchError(f"a and b must have {self.r + 1} entries")
        if any(v <= 0.0 for v in self.a) or any(v <= 0.0 for v in self.b):
            raise ParameterRangeError("a and b entries must be positive")

    def swapped(self) -> "SParams":
        return SParams(self.r, self.n, self.b, self.a)


def _axis_series(nj, omega, shift, d1, d2, half_x):
    # terminating 3F2(-nj, omega, shift + x/2; d1, d2; 1) vectorised over x/2
    half_x = np.asarray(half_x)
    total = np.ones_like(half_x, dtype=complex)
    term = np.ones_like(half_x, dtype=complex)
    for k in range(nj):
        term = term * ((-nj + k) * (omega + k) * (shift + half_x + k)) / (
            (d1 + k) * (d2 + k) * (k + 1.0)
        )
        total = total + term
    return total


def s_axis_factor(p: SParams, j: int, xj, form: str = "3f2"):
    """Factor of the family attached to axis j, at complex argument(s) xj."""
    nj = p.n[j - 1]
    ntail = int(tail_sum(p.n, j + 1))
    a_tail = tail_sum(p.a, j + 1)
    b_tail = tail_sum(p.b, j + 1)
    a_head = tail_sum(p.a, j)
    b_head = tail_sum(p.b, j)
    half = np.asarray(xj, dtype=complex) / 2.0
    scalar = half.ndim == 0
    poch = np.ones_like(half, dtype=complex)
    for i in range(ntail):
        poch = poch * (a_tail + half + i)
    if form == "3f2":
        series = _axis_series(
            nj,
            nj + 2.0 * ntail + a_head + b_head - 1.0,
            ntail + a_tail,
            2.0 * ntail + a_tail + b_tail,
            ntail + a_head,
            half,
        )
        out = poch * series
        return complex(out[()]) if scalar else out
    if form == "hahn":
        if not scalar:
            raise ParameterRangeError("hahn form is scalar-only")
        hahn = hahn_eval(
            nj,
            ntail + a_tail,
            p.b[j - 1],
            ntail + b_tail,
            p.a[j - 1],
            -1j * complex(xj) / 2.0,
        )
        pref = math.factorial(nj) * (-1j) ** nj / (
            pochhammer(ntail + a_head, nj)
            * pochhammer(2.0 * ntail + a_tail + b_tail, nj)
        )
        return pref * complex(poch[()]) * hahn
    raise ParameterRangeError(f"unknown form {form!r}")


def s_eval(p: SParams, x, form: str = "3f2") -> complex:
    """Value of the family member at a point with complex coordinates."""
    x = [complex(v) for v in x]
    if len(x) != p.r:
        raise DimensionMismatchError(f"x must have {p.r} coordinates")
    value = 1.0 + 0.0j
    for j in range(1, p.r + 1):
        value *= s_axis_factor(p, j, x[j - 1], form=form)
    return value


def _weight_axis_log(p: SParams, j: int, x):
    x = np.asarray(x, dtype=float)
    half = 0.5j * x
    a_tail = tail_sum(p.a, j + 1)
    b_tail = tail_sum(p.b, j + 1)
    return (
        log_gamma_right_array(p.a[j - 1] - half)
        + log_gamma_right_array(a_tail + half)
        + log_gamma_right_array(p.b[j - 1] + half)
        + log_gamma_right_array(b_tail - half)
    )


def w_weight(p: SParams, x) -> complex:
    """Gamma-product weight at a real point; log-assembled, one exponentiation.

    Real and positive whenever a == b (conjugate pairing of the factors).
    """
    x = np.asarray(x, dtype=float)
    if x.shape != (p.r,):
        raise DimensionMismatchError(f"x must have {p.r} coordinates")
    total = 0.0 + 0.0j
    for j in range(1, p.r + 1):
        total += complex(_weight_axis_log(p, j, x[j - 1])[()])
    return cmath.exp(total)


def s_orthogonality_rhs(p: SParams) -> float:
    """Diagonal value of the orthogonality integral in closed form."""
    alpha = tuple(p.a[i] + p.b[i] - 1.0 for i in range(p.r + 1))
    value = 2.0 ** (2 * p.r) * math.pi**p.r * h_norm(p.n, alpha)
    for j in range(1, p.r + 1):
        nj = p.n[j - 1]
        ntail = tail_sum(p.n, j + 1)
        value *= math.factorial(nj) ** 2
        value *= math.exp(
            math.lgamma(ntail + tail_sum(p.a, j)) + math.lgamma(ntail + tail_sum(p.b, j))
        )
        value /= pochhammer(2.0 * ntail + tail_sum(p.a, j + 1) + tail_sum(p.b, j + 1), nj) ** 2
    return value


def s_orthogonality_check(
    p: SParams,
    m: Sequence[int],
    tolerance: float = 1e-6,
    quadrature_tolerance: float = 1e-9,
) -> VerificationReport:
    """Weighted line-integral orthogonality against the closed-form norm.

    The integrand separates per axis (every factor of the weight and of
    both family members depends on a single coordinate), so the check
    evaluates r one-dimensional integrals.  Pass criterion:
    |LHS - RHS| <= tolerance * max(1, diagonal scale).
    """
    m = tuple(int(v) for v in m)
    if len(m) != p.r:
        raise DimensionMismatchError(f"m must have {p.r} entries")
    q = SParams(p.r, m, p.b, p.a)
    lhs = 1.0 + 0.0j
    for j in range(1, p.r + 1):

        def integrand(x, j=j):
            logw = _weight_axis_log(p, j, x)
            sn = s_axis_factor(p, j, 1j * x)
            sm = s_axis_factor(q, j, -1j * x)
            return np.exp(logw) * sn * sm

        decay = 0.9 * math.pi  # Gamma quadruple decays like exp(-pi |x|); margin absorbs polynomial growth
        probes = np.linspace(-10.0, 10.0, 11)
        amplitude = float(np.max(np.abs(integrand(probes)) * np.exp(decay * np.abs(probes))))
        rule = line_rule(decay, quadrature_tolerance, core_radius=2.0, amplitude=max(amplitude, 1.0))
        lhs *= rule.integrate(integrand)
    diag_scale = s_orthogonality_rhs(p)
    rhs = diag_scale if tuple(p.n) == m else 0.0
    scale = max(1.0, abs(diag_scale))
    return make_report(
        "sfamily-orthogonality",
        {"r": p.r, "n": list(p.n), "m": list(m), "a": list(p.a), "b": list(p.b), "scale": scale},
        lhs / scale,
        rhs / scale,
        tolerance,
    )


def _relation_p1(p: SParams, x):
    nr = p.n[-1]
    a_head_r = tail_sum(p.a, p.r)  # a_r + a_{r+1}
    b_head_r = tail_sum(p.b, p.r)
    series = hyp3f2(
        (-nr, nr + a_head_r + b_head_r - 1.0, p.a[p.r] + x[-1] / 2.0),
        (p.a[p.r] + p.b[p.r], a_head_r),
        1.0,
    )
    poch = 1.0 + 0.0j
    for j in range(1, p.r):
        poch *= pochhammer(tail_sum(p.a, j + 1) + x[j - 1] / 2.0, nr)
    reduced = SParams(
        p.r - 1,
        p.n[:-1],
        p.a[: p.r - 1] + (p.a[p.r - 1] + p.a[p.r] + nr,),
        p.b[: p.r - 1] + (p.b[p.r - 1] + p.b[p.r] + nr,),
    )
    return series * poch * s_eval(reduced, x[:-1])


def _relation_p2(p: SParams, x):
    ntail = int(tail_sum(p.n, 2))
    a_tail = tail_sum(p.a, 2)
    b_tail = tail_sum(p.b, 2)
    series = hyp3f2(
        (
            -p.n[0],
            p.n[0] + 2.0 * ntail + sum(p.a) + sum(p.b) - 1.0,
            ntail + a_tail + x[0] / 2.0,
        ),
        (2.0 * ntail + a_tail + b_tail, ntail + sum(p.a)),
        1.0,
    )
    reduced = SParams(p.r - 1, p.n[1:], p.a[1:], p.b[1:])
    return pochhammer(a_tail + x[0] / 2.0, ntail) * s_eval(reduced, x[1:]) * series


def s_relation_check(p: SParams, which: str, x, tolerance: float = 1e-11) -> VerificationReport:
    """Rank-reduction factorizations: peel the last axis (P1) or the first (P2).

    At r = 2 these are the two printed bivariate factorizations.
    """
    if p.r < 2:
        raise ParameterRangeError("factorization checks require r >= 2")
    x = [complex(v) for v in x]
    lhs = s_eval(p, x)
    if which.upper() == "P1":
        rhs = _relation_p1(p, x)
    elif which.upper() == "P2":
        rhs = _relation_p2(p, x)
    else:
        raise ParameterRangeError(f"unknown relation {which!r}; use P1 or P2")
    denom = max(abs(lhs), abs(rhs), 1e-300)
    residual = abs(lhs - rhs) / denom
    report = make_report(
        f"sfamily-{which.upper()}",
        {"r": p.r, "n": list(p.n), "a": list(p.a), "b": list(p.b),
         "x": [[v.real, v.imag] for v in x]},
        lhs,
        rhs,
        tolerance,
    )
    report.rel_residual = residual
    report.passed = residual <= tolerance
    return report
