"""Univariate Jacobi polynomials and continuous Hahn polynomials."""

from __future__ import annotations

import math

import numpy as np

from .errors import ParameterRangeError
from .hypergeom import hyp3f2
from .numerics import pochhammer


def jacobi_eval(n: int, alpha: float, beta: float, x):
    """Jacobi polynomial of degree n at x via the three-term recurrence.

    x may be a scalar (real or complex) or an ndarray.  The recurrence is
    the numerically stable production path; :func:`jacobi_explicit_sum`
    keeps the defining alternating sum as an independent oracle.
    """
    if n < 0:
        raise ParameterRangeError("degree must be non-negative")
    scalar = np.isscalar(x) or np.ndim(x) == 0
    xv = np.asarray(x)
    p_prev = np.ones_like(xv, dtype=xv.dtype if np.iscomplexobj(xv) else float)
    if n == 0:
        return p_prev[()] if scalar else p_prev
    ab = alpha + beta
    p_curr = 0.5 * (alpha - beta + (ab + 2.0) * xv)
    for k in range(2, n + 1):
        c1 = 2.0 * k * (k + ab) * (2 * k + ab - 2.0)
        if abs(c1) < 1e-12:
            # degenerate recurrence (only possible for alpha+beta <= -2)
            out = jacobi_explicit_sum(n, alpha, beta, x)
            return out
        c2 = (2 * k + ab - 1.0) * (alpha * alpha - beta * beta)
        c3 = (2 * k + ab - 1.0) * (2 * k + ab) * (2 * k + ab - 2.0)
        c4 = 2.0 * (k + alpha - 1.0) * (k + beta - 1.0) * (2 * k + ab)
        p_prev, p_curr = p_curr, ((c2 + c3 * xv) * p_curr - c4 * p_prev) / c1
    return p_curr[()] if scalar else p_curr


def _binomial_gamma(top: float, k: int) -> float:
    # C(top, k) for non-integer top, via the Pochhammer extension
    return (-1.0) ** k * pochhammer(-top, k) / math.factorial(k)


def jacobi_explicit_sum(n: int, alpha: float, beta: float, x):
    """Defining representation 2^-n sum_k C(n+a,k) C(n+b,n-k) (x+1)^k (x-1)^(n-k)."""
    xv = np.asarray(x)
    total = np.zeros_like(xv, dtype=complex if np.iscomplexobj(xv) else float)
    for k in range(n + 1):
        coeff = _binomial_gamma(n + alpha, k) * _binomial_gamma(n + beta, n - k)
        total = total + coeff * (xv + 1.0) ** k * (xv - 1.0) ** (n - k)
    total = total * 0.5**n
    return total[()] if (np.isscalar(x) or np.ndim(x) == 0) else total


def jacobi_shifted_eval(n: int, alpha: float, beta: float, t):
    """Jacobi polynomial mapped to [0, 1]: value at x = 2t - 1."""
    return jacobi_eval(n, alpha, beta, 2.0 * np.asarray(t) - 1.0 if np.ndim(t) else 2.0 * t - 1.0)


def jacobi_norm(n: int, alpha: float, beta: float) -> float:
    """Squared L2 norm of the degree-n Jacobi polynomial on [-1, 1]."""
    if alpha <= -1.0 or beta <= -1.0:
        raise ParameterRangeError(f"Jacobi exponents must exceed -1, got ({alpha}, {beta})")
    ab = alpha + beta
    return math.exp(
        (ab + 1.0) * math.log(2.0)
        + math.lgamma(alpha + n + 1.0)
        + math.lgamma(beta + n + 1.0)
        - math.lgamma(n + 1.0)
        - math.log(ab + 2.0 * n + 1.0)
        - math.lgamma(ab + n + 1.0)
    )


def hahn_eval(n: int, a: complex, b: complex, c: complex, d: complex, x: complex) -> complex:
    """Continuous Hahn polynomial p_n(x; a, b, c, d).

    i^n (a+c)_n (a+d)_n / n! * 3F2(-n, n+a+b+c+d-1, a+ix; a+c, a+d; 1);
    all parameters and the argument may be complex.
    """
    if n < 0:
        raise ParameterRangeError("degree must be non-negative")
    prefactor = 1j**n * pochhammer(complex(a) + complex(c), n) * pochhammer(
        complex(a) + complex(d), n
    ) / math.factorial(n)
    series = hyp3f2(
        (-n, n + a + b + c + d - 1.0, a + 1j * complex(x)),
        (a + c, a + d),
        1.0,
    )
    return prefactor * series
