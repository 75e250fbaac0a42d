"""Terminating generalized hypergeometric series.

Every series this library evaluates terminates because some numerator
parameter is a non-positive integer -n; the sum then has exactly n+1
terms.  Non-terminating input is rejected, never approximated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NonTerminatingSeriesError, ZeroDenominatorError

INTEGER_MATCH_TOL = 1e-9


@dataclass(frozen=True)
class HyperParams:
    """Parameter block for a pFq series at a fixed argument."""

    numerator: tuple
    denominator: tuple
    argument: complex = 1.0


def nonpositive_integer_index(value, tol: float = INTEGER_MATCH_TOL):
    """Return n >= 0 when value is (numerically) the integer -n, else None."""
    value = complex(value)
    nearest = round(value.real)
    if nearest > 0:
        return None
    if abs(value - nearest) <= tol * (1.0 + abs(value)):
        return -int(nearest)
    return None


def termination_index(numerator: Sequence[complex]) -> int:
    """Smallest n >= 0 with some numerator parameter equal to -n."""
    hits = [nonpositive_integer_index(a) for a in numerator]
    hits = [h for h in hits if h is not None]
    if not hits:
        raise NonTerminatingSeriesError(
            f"no numerator parameter is a non-positive integer: {tuple(numerator)}"
        )
    return min(hits)


def eval_terminating(numerator, denominator, argument=1.0) -> complex:
    """Sum of the terminating pFq series.

    Terms are accumulated forward through the ratio recurrence
    term_{k+1} = term_k * prod(a_i + k) / prod(b_j + k) * z / (k + 1)
    with Neumaier-compensated addition so mixed-sign sums at unit
    argument are reproducible.
    """
    nums = [complex(v) for v in numerator]
    dens = [complex(v) for v in denominator]
    n = termination_index(nums)
    for b in dens:
        j = nonpositive_integer_index(b)
        if j is not None and j <= n - 1:
            raise ZeroDenominatorError(
                f"denominator parameter {b} vanishes inside the active range (n = {n})"
            )
    z = complex(argument)
    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j
    term = 1.0 + 0.0j
    for k in range(n + 1):
        s = total + term
        if abs(total) >= abs(term):
            comp += (total - s) + term
        else:
            comp += (term - s) + total
        total = s
        if k < n:
            ratio = z / (k + 1)
            for a in nums:
                ratio *= a + k
            for b in dens:
                ratio /= b + k
            term *= ratio
    return total + comp


def hyp3f2(numerator, denominator, argument=1.0) -> complex:
    """Terminating 3F2, the workhorse special case."""
    if len(numerator) != 3 or len(denominator) != 2:
        raise ValueError("hyp3f2 expects 3 numerator and 2 denominator parameters")
    return eval_terminating(numerator, denominator, argument)


def eval_params(params: HyperParams) -> complex:
    return eval_terminating(params.numerator, params.denominator, params.argument)
