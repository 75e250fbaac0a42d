"""Quadrature rules on [-1,1], the unit simplex, and the real line.

These rules are the independent numeric oracle for every identity in the
library: Gauss-Jacobi rules come from the Golub-Welsch eigenvalue method,
simplex rules from the iterated change of variables that maps the simplex
to a cube, and line rules are truncated composite Gauss-Legendre with an
explicit tail/panel error budget.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Sequence

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import BudgetInfeasibleError, ParameterRangeError


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and positive weights with a domain tag and a declared guarantee.

    For ``interval`` and ``simplex`` rules the weight function is folded
    into the weights and ``exactness_degree`` states the polynomial degree
    integrated exactly.  For ``real-line`` rules ``error_budget`` is the
    absolute error bound under the decay assumptions used to build it.
    """

    nodes: np.ndarray
    weights: np.ndarray
    domain: str
    dimension: int = 1
    exactness_degree: int | None = None
    error_budget: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "nodes", np.asarray(self.nodes))
        object.__setattr__(self, "weights", np.asarray(self.weights, dtype=float))

    def integrate(self, integrand: Callable) -> complex:
        """Apply the rule: integrand receives the full node array."""
        values = np.asarray(integrand(self.nodes))
        return np.sum(self.weights * values)

    def __len__(self) -> int:
        return len(self.weights)


def _jacobi_mu0(alpha: float, beta: float) -> float:
    # integral of (1-x)^alpha (1+x)^beta over [-1, 1]
    return math.exp(
        (alpha + beta + 1) * math.log(2.0)
        + math.lgamma(alpha + 1)
        + math.lgamma(beta + 1)
        - math.lgamma(alpha + beta + 2)
    )


def gauss_jacobi(npoints: int, alpha: float, beta: float) -> QuadratureRule:
    """n-point Gauss rule for the weight (1-x)^alpha (1+x)^beta on [-1,1].

    Golub-Welsch: eigen-decompose the symmetrised Jacobi matrix of the
    monic three-term recurrence.  Exact for polynomial degree 2n-1.
    """
    if alpha <= -1.0 or beta <= -1.0:
        raise ParameterRangeError(f"Jacobi exponents must exceed -1, got ({alpha}, {beta})")
    if npoints < 1:
        raise ParameterRangeError("npoints must be >= 1")
    ab = alpha + beta
    diag = np.empty(npoints)
    diag[0] = (beta - alpha) / (ab + 2.0)
    for k in range(1, npoints):
        diag[k] = (beta * beta - alpha * alpha) / ((2 * k + ab) * (2 * k + ab + 2.0))
    off = np.empty(max(npoints - 1, 0))
    for k in range(1, npoints):
        if k == 1:
            # (k + ab) cancels against (2k + ab - 1) at k = 1
            bk = 4.0 * (1 + alpha) * (1 + beta) / ((2 + ab) ** 2 * (3 + ab))
        else:
            bk = (
                4.0 * k * (k + alpha) * (k + beta) * (k + ab)
                / ((2 * k + ab) ** 2 * (2 * k + ab + 1.0) * (2 * k + ab - 1.0))
            )
        off[k - 1] = math.sqrt(bk)
    nodes, vectors = eigh_tridiagonal(diag, off)
    weights = _jacobi_mu0(alpha, beta) * vectors[0] ** 2
    return QuadratureRule(nodes, weights, "interval", 1, exactness_degree=2 * npoints - 1)


def gauss_jacobi_unit(npoints: int, exponent_at_zero: float, exponent_at_one: float) -> QuadratureRule:
    """Gauss rule for ``u**p (1-u)**q`` on [0, 1] (p at u=0, q at u=1)."""
    base = gauss_jacobi(npoints, exponent_at_one, exponent_at_zero)
    u = 0.5 * (base.nodes + 1.0)
    w = base.weights * 0.5 ** (exponent_at_zero + exponent_at_one + 1.0)
    return QuadratureRule(u, w, "interval", 1, exactness_degree=base.exactness_degree)


def simplex_rule(r: int, degree: int, alpha: Sequence[float]) -> QuadratureRule:
    """Tensor rule on the r-simplex for the weight x1^a1 ... (1-|x|)^a_{r+1}.

    Built by the iterated substitution x_j = u_j (1 - x_1 - ... - x_{j-1}),
    which turns the weighted integral into a product of one-dimensional
    Jacobi-type integrals on [0, 1].  Exact for total degree <= degree.
    """
    alpha = tuple(float(v) for v in alpha)
    if r < 1:
        raise ParameterRangeError("simplex dimension must be >= 1")
    if len(alpha) != r + 1:
        raise ParameterRangeError(f"alpha must have {r + 1} entries, got {len(alpha)}")
    if any(v <= -1.0 for v in alpha):
        raise ParameterRangeError("alpha entries must exceed -1")
    npts = max(1, (int(degree) + 2) // 2)
    axis_nodes, axis_weights = [], []
    for j in range(1, r + 1):
        tail = sum(alpha[j:])  # alpha_{j+1} + ... + alpha_{r+1}
        rule = gauss_jacobi_unit(npts, alpha[j - 1], tail + (r - j))
        axis_nodes.append(rule.nodes)
        axis_weights.append(rule.weights)
    grids = np.meshgrid(*axis_nodes, indexing="ij")
    u = np.stack([g.ravel() for g in grids], axis=-1)
    wgrids = np.meshgrid(*axis_weights, indexing="ij")
    w = np.ones(u.shape[0])
    for g in wgrids:
        w = w * g.ravel()
    x = np.empty_like(u)
    remaining = np.ones(u.shape[0])
    for j in range(r):
        x[:, j] = u[:, j] * remaining
        remaining = remaining * (1.0 - u[:, j])
    return QuadratureRule(x, w, "simplex", r, exactness_degree=degree)


@lru_cache(maxsize=8)
def _panel_gauss(order: int):
    return np.polynomial.legendre.leggauss(order)


def line_rule(
    decay_rate: float,
    tolerance: float,
    core_radius: float = 4.0,
    amplitude: float = 1.0,
    max_points: int = 500_000,
    panel_order: int = 16,
    panel_width: float = 0.5,
) -> QuadratureRule:
    """Truncated composite Gauss-Legendre rule for exponentially decaying integrands.

    Assumes |f(x)| <= amplitude * exp(-decay_rate * |x|) beyond the core
    radius; the truncation point L makes the analytic tail bound fall
    below tolerance/2.  Width-0.5 order-16 panels keep the panel error far
    below any tolerance used here for integrands analytic in a strip of
    half-width >= 1 about the real axis (the Gamma/tanh integrands in this
    library all are).
    """
    if decay_rate <= 0.0:
        raise ParameterRangeError("decay_rate must be positive")
    if tolerance <= 0.0:
        raise ParameterRangeError("tolerance must be positive")
    tail_target = 0.5 * tolerance
    span = math.log(max(2.0 * amplitude / (tail_target * decay_rate), math.e)) / decay_rate
    half_length = core_radius + span
    n_panels = max(4, int(math.ceil(2.0 * half_length / panel_width)))
    total = n_panels * panel_order
    if total > max_points:
        raise BudgetInfeasibleError(
            f"line rule would need {total} nodes (cap {max_points}) for tolerance {tolerance}"
        )
    xg, wg = _panel_gauss(panel_order)
    edges = np.linspace(-half_length, half_length, n_panels + 1)
    lo, hi = edges[:-1], edges[1:]
    half = 0.5 * (hi - lo)
    mid = 0.5 * (hi + lo)
    nodes = (half[:, None] * xg[None, :] + mid[:, None]).ravel()
    weights = (half[:, None] * wg[None, :]).ravel()
    return QuadratureRule(nodes, weights, "real-line", 1, error_budget=tolerance)


def rule_to_rows(rule: QuadratureRule):
    """Yield CSV-friendly (coordinates..., weight) rows."""
    nodes = np.atleast_2d(rule.nodes.T).T if rule.nodes.ndim == 1 else rule.nodes
    for point, weight in zip(nodes.reshape(len(rule), -1), rule.weights):
        yield [*point.tolist(), float(weight)]
