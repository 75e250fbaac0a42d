"""Contiguous recurrence relations for the Gamma-weighted orthogonal family.

Each relation is a 3- or 4-term linear identity among parameter-shifted
evaluations, with printed coefficient formulas.  A least-squares
brute-force fitter can re-derive the coefficients from samples; it is the
erratum oracle for the printed formulas.  One printed formula is wrong
and ships with a documented correction: the third coefficient of the
bivariate mixed-shift relation S2_103 carries the opposite sign (its
rank-general counterpart SR_T516 prints the correct one).  The source
numbering skips a *5/105 slot; the identifier sets below follow the
printed labels, so those gaps are intentional.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Sequence

import numpy as np

from .errors import (
    DegenerateParameterError,
    ParameterRangeError,
    RankDeficientError,
    ZeroDenominatorError,
)
from .hypergeom import eval_terminating, hyp3f2, nonpositive_integer_index
from .numerics import pochhammer

_EPS = 1e-7


class RelationId(str, Enum):
    H1 = "H1"
    H2 = "H2"
    H3 = "H3"
    S1_STAR1 = "S1_STAR1"
    S1_STAR2 = "S1_STAR2"
    S1_STAR3 = "S1_STAR3"
    S1_STAR4 = "S1_STAR4"
    S1_STAR6 = "S1_STAR6"
    S1_STAR7 = "S1_STAR7"
    S2_101 = "S2_101"
    S2_102 = "S2_102"
    S2_103 = "S2_103"
    S2_104 = "S2_104"
    S2_106 = "S2_106"
    S2_107 = "S2_107"
    SR_T514 = "SR_T514"
    SR_T515 = "SR_T515"
    SR_T516 = "SR_T516"
    SR_T517 = "SR_T517"
    SR_T518 = "SR_T518"
    SR_T519 = "SR_T519"


ALL_RELATION_IDS = tuple(RelationId)

#: Printed-coefficient errata established by the brute-force oracle (and by
#: exact rational evaluation in the test suite): relation id -> description.
ERRATA = {
    RelationId.S2_103: "third coefficient printed with the wrong sign; "
    "corrected value is its negation (matches the rank-general form)",
}


def s_value(n: Sequence[int], a: Sequence, b: Sequence, x: Sequence) -> complex:
    """Family member as a per-axis product; no positivity constraints, so
    shifted parameters from the recurrences are admissible."""
    r = len(n)
    value = 1.0 + 0.0j
    for j in range(1, r + 1):
        nj = int(n[j - 1])
        ntail = int(sum(n[j:]))
        a_tail = sum(a[j:])
        b_tail = sum(b[j:])
        a_head = sum(a[j - 1 :])
        b_head = sum(b[j - 1 :])
        xj = complex(x[j - 1])
        value *= pochhammer(a_tail + xj / 2.0, ntail)
        value *= hyp3f2(
            (-nj, nj + 2.0 * ntail + a_head + b_head - 1.0, ntail + a_tail + xj / 2.0),
            (2.0 * ntail + a_tail + b_tail, ntail + a_head),
            1.0,
        )
    return value


def _shift_first(vec, delta):
    return (vec[0] + delta,) + tuple(vec[1:])


def _shift_pair_last(vec, d_prev, d_last):
    return tuple(vec[:-2]) + (vec[-2] + d_prev, vec[-1] + d_last)


# ---------------------------------------------------------------------------
# S-family relation patterns (rank-general; the univariate and bivariate ids
# are the r = 1 and r = 2 specialisations)
# ---------------------------------------------------------------------------


def _unpack(params):
    n = tuple(int(v) for v in params["n"])
    a = tuple(params["a"])
    b = tuple(params["b"])
    x = tuple(params["x"])
    if not (len(a) == len(b) == len(n) + 1 and len(x) == len(n)):
        raise ParameterRangeError("inconsistent n/a/b/x lengths")
    return n, a, b, x


def _type1_terms(params):
    n, a, b, x = _unpack(params)
    return [
        (n, a, b),
        (_shift_first(n, 1), a, _shift_first(b, -1)),
        (_shift_first(n, 2), a, _shift_first(b, -2)),
    ]


def _type1_coeffs(params):
    n, a, b, x = _unpack(params)
    n1 = n[0]
    if n1 < 1:
        raise DegenerateParameterError("first index must be >= 1 (denominator n1)")
    n2t = sum(n[1:])
    A, B = sum(a), sum(b)
    a2, b2 = sum(a[1:]), sum(b[1:])
    x1 = x[0]
    c0 = (b[0] - 1 + x1 / 2) / n1
    c1 = ((2 * n2t + a2 + b2) * (n2t + A) - (n1 + 2 * n2t + A + B - 1) * (n2t + a2 + x1 / 2)) / (
        n1 * (n1 + 1)
    ) + (n1 + 3 * n2t + a[0] + 2 * a2 - b[0] + b2 + 2 - x1 / 2) / n1
    c2 = -(n1 + 2 * n2t + a2 + b2 + 1) * (sum(n) + A + 1) / (n1 * (n1 + 1))
    return [c0, c1, c2]


def _type2_terms(params):
    n, a, b, x = _unpack(params)
    return [(n, a, b), (n, a, _shift_first(b, -1)), (n, a, _shift_first(b, -2))]


def _type2_coeffs(params):
    n, a, b, x = _unpack(params)
    n1, n2t = n[0], sum(n[1:])
    A, B = sum(a), sum(b)
    a2, b2 = sum(a[1:]), sum(b[1:])
    x1 = x[0]
    d = n1 + 2 * n2t + A + B - 1
    if min(abs(d), abs(d - 1)) < _EPS:
        raise DegenerateParameterError("index/parameter sum denominator vanishes")
    c0 = -(b[0] - 1 + x1 / 2) / d
    c1 = ((2 * n2t + a2 + b2) * (n2t + A) + n1 * (n2t + a2 + x1 / 2)) / ((d - 1) * d) + (
        n1 - n2t - a2 + 2 * b[0] - 3 + x1 / 2
    ) / d
    c2 = -(n1 + a[0] + b[0] - 2) * (sum(n) + B - 2) / ((d - 1) * d)
    return [c0, c1, c2]


def _type3_terms(params):
    n, a, b, x = _unpack(params)
    return [
        (n, a, b),
        (n, _shift_pair_last(a, 1, -1), _shift_pair_last(b, -1, 1)),
        (n, _shift_pair_last(a, 2, -2), _shift_pair_last(b, -2, 2)),
    ]


def _type3_coeffs(params, third_sign=-1.0):
    n, a, b, x = _unpack(params)
    r = len(n)
    nr = n[-1]
    ar_head = a[-2] + a[-1]
    br_head = b[-2] + b[-1]
    xr = x[-1]
    d0 = a[-1] + xr / 2
    if min(abs(d0), abs(d0 - 1)) < _EPS:
        raise DegenerateParameterError("last-axis argument denominator vanishes")
    c0 = -(b[-2] - 1 + xr / 2) / d0
    c1 = (ar_head * (a[-1] + b[-1]) + nr * (nr + ar_head + br_head - 1)) / ((d0 - 1) * d0) - (
        ar_head - b[-2] + b[-1] + 2 - xr
    ) / d0
    c2 = third_sign * (a[-2] + 1 - xr / 2) * (b[-1] + 1 - xr / 2) / ((d0 - 1) * d0)
    return [c0, c1, c2]


def _type4_terms(params):
    n, a, b, x = _unpack(params)
    return [
        (n, a, b),
        (n, _shift_first(a, 1), _shift_first(b, -1)),
        (n, _shift_first(a, 2), _shift_first(b, -2)),
    ]


def _type4_coeffs(params):
    n, a, b, x = _unpack(params)
    n1, n2t = n[0], sum(n[1:])
    A, B = sum(a), sum(b)
    a2, b2 = sum(a[1:]), sum(b[1:])
    x1 = x[0]
    d = n2t + A - 1
    if min(abs(d), abs(d + 1), abs(d + 2)) < _EPS:
        raise DegenerateParameterError("head parameter-sum denominator vanishes")
    c0 = -(b[0] - 1 + x1 / 2) / d
    c1 = (
        (2 * n2t + 2 * A + 1) * (2 * n2t + a2 + B - 2 + x1 / 2)
        + n1 * (n1 + 2 * n2t + A + B - 1)
        - (2 * n2t + A + B - 1) * (n2t + a2 + x1 / 2)
    ) / (d * (d + 1)) - (2 * n2t + a2 + b2 - 1) / d
    c2 = -(sum(n) + A + 1) * (sum(n) + B - 2) * (a[0] + 1 - x1 / 2) / (d * (d + 1) * (d + 2))
    return [c0, c1, c2]


def _type5_terms(params):
    n, a, b, x = _unpack(params)
    return [
        (n, a, b),
        (n, a, _shift_pair_last(b, -1, 1)),
        (n, a, _shift_pair_last(b, -2, 2)),
    ]


def _type5_coeffs(params):
    n, a, b, x = _unpack(params)
    nr = n[-1]
    ar_head = a[-2] + a[-1]
    br_head = b[-2] + b[-1]
    xr = x[-1]
    d = a[-1] + b[-1] - 1
    if min(abs(d), abs(d + 1), abs(d + 2)) < _EPS:
        raise DegenerateParameterError("last-axis parameter-sum denominator vanishes")
    c0 = -(b[-2] - 1 + xr / 2) / d
    c1 = (
        nr * (nr + ar_head + br_head - 1)
        - (a[-1] + xr / 2) * (ar_head + br_head - 1)
        + (2 * a[-1] + 2 * b[-1] + 1) * (ar_head + b[-2] - 2 + xr / 2)
    ) / (d * (d + 1)) - (ar_head - 1) / d
    c2 = -(nr + a[-2] + b[-2] - 2) * (nr + a[-1] + b[-1] + 1) * (b[-1] + 1 - xr / 2) / (
        d * (d + 1) * (d + 2)
    )
    return [c0, c1, c2]


def _type6_terms(params):
    n, a, b, x = _unpack(params)
    return [(n, a, b), (n, _shift_first(a, 1), b), (n, _shift_first(a, 1), _shift_first(b, -1))]


def _type6_coeffs(params):
    n, a, b, x = _unpack(params)
    n2t = sum(n[1:])
    A, B = sum(a), sum(b)
    return [n2t + A, -(n[0] + 2 * n2t + A + B - 1), sum(n) + B - 1]


# ---------------------------------------------------------------------------
# Raw 3F2 relations (argument z, coefficients carry a z-multiplier structure)
# ---------------------------------------------------------------------------


def _h_unpack(params):
    m = tuple(params["m"])
    s = tuple(params["s"])
    z = complex(params["z"])
    if len(m) != 3 or len(s) != 2:
        raise ParameterRangeError("need 3 m-parameters and 2 s-parameters")
    return m, s, z


def _h_check_terminating(m, shift_slot=None):
    # the un-shifted slots must force termination for every shifted term
    candidates = [m[i] for i in range(3) if i != shift_slot]
    if all(nonpositive_integer_index(v) is None for v in candidates):
        raise DegenerateParameterError(
            "no un-shifted numerator parameter is a non-positive integer; series would not terminate"
        )


def _h1_coeffs(params):
    m, s, z = _h_unpack(params)
    m1 = m[0]
    if min(abs(m1), abs(m1 - 1)) < _EPS:
        raise DegenerateParameterError("m1 denominator vanishes")
    p2 = (m1 - 1) * m1
    b1 = (s[0] + s[1] + 1 - 3 * m1) / m1
    c1 = (2 * m1 - m[1] - m[2] - 1) / m1
    b2 = (s[0] * s[1] + (m1 - 1) * (3 * m1 - 2 * (s[0] + s[1] + 1))) / p2
    c2 = -((m1 - 1) * (m1 - m[1] - m[2] - 1) + m[1] * m[2]) / p2
    b3 = -(m1 - s[0] - 1) * (m1 - s[1] - 1) / p2
    # relation: sum_k (B_k + C_k z) F_k = 0 with the printed terms in order
    return [(-1.0, 1.0), (-b1, -c1), (-b2, -c2), (-b3, 0.0)]


def _h1_terms(params):
    m, s, z = _h_unpack(params)
    _h_check_terminating(m, shift_slot=0)
    return [((m[0] + d, m[1], m[2]), s) for d in (1, 0, -1, -2)]


def _h2_coeffs(params):
    m, s, z = _h_unpack(params)
    s1 = s[0]
    if min(abs(s1 - 1), abs(s1), abs(s1 + 1)) < _EPS:
        raise DegenerateParameterError("s1 denominator vanishes")
    b1 = (s[1] - 2 * s1) / (s1 - 1)
    b2 = (s1 - s[1] + 1) / (s1 - 1)
    c1 = (3 * s1 - m[0] - m[1] - m[2]) / (s1 - 1)
    c2 = (
        (2 * s1 + 1) * (m[0] + m[1] + m[2])
        - 3 * (s1 - 1) * (s1 + 2)
        - 7
        - m[0] * m[1]
        - m[0] * m[2]
        - m[1] * m[2]
    ) / ((s1 - 1) * s1)
    c3 = (s1 - m[0] + 1) * (s1 - m[1] + 1) * (s1 - m[2] + 1) / ((s1 - 1) * s1 * (s1 + 1))
    return [(-1.0, 1.0), (-b1, -c1), (-b2, -c2), (0.0, -c3)]


def _h2_terms(params):
    m, s, z = _h_unpack(params)
    _h_check_terminating(m)
    return [(m, (s[0] + d, s[1])) for d in (-1, 0, 1, 2)]


def _h3_coeffs(params):
    m, s, z = _h_unpack(params)
    return [(s[0], 0.0), (m[0] - s[0], 0.0), (-m[0], 0.0)]


def _h3_terms(params):
    m, s, z = _h_unpack(params)
    _h_check_terminating(m, shift_slot=0)
    return [(m, s), (m, (s[0] + 1, s[1])), ((m[0] + 1, m[1], m[2]), (s[0] + 1, s[1]))]


# ---------------------------------------------------------------------------
# Registry
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _RelationSpec:
    family: str  # "H" or "S"
    rank: int | None  # fixed rank for S1/S2 ids, None = taken from params
    terms: Callable
    coeffs: Callable
    corrected: Callable | None
    axis: str  # coordinate entering the coefficients: "first", "last", "z"
    fit_bases: tuple  # per non-fixed term: tuple of exponents of the fit polynomial
    fit_multiplier: Callable | None = None  # common denominator cleared before fitting


_S_SPECS = {
    "t1": (_type1_terms, _type1_coeffs, None, "first", ((0, 1), (0,))),
    "t2": (_type2_terms, _type2_coeffs, None, "first", ((0, 1), (0,))),
    "t3": (
        _type3_terms,
        lambda p: _type3_coeffs(p, third_sign=-1.0),
        None,
        "last",
        ((0, 1, 2), (0, 1, 2)),
    ),
    "t4": (_type4_terms, _type4_coeffs, None, "first", ((0, 1), (0, 1))),
    "t5": (_type5_terms, _type5_coeffs, None, "last", ((0, 1), (0, 1))),
    "t6": (_type6_terms, _type6_coeffs, None, "first", ((0,), (0,))),
}


def _type3_multiplier(params):
    n, a, b, x = _unpack(params)
    d0 = a[-1] + x[-1] / 2
    return (d0 - 1) * d0


def _make_s_spec(kind, rank, printed_sign_flip=False):
    terms, coeffs, _, axis, bases = _S_SPECS[kind]
    printed = coeffs
    corrected = None
    if printed_sign_flip:
        printed = lambda p: _type3_coeffs(p, third_sign=+1.0)
        corrected = lambda p: _type3_coeffs(p, third_sign=-1.0)
    return _RelationSpec(
        family="S",
        rank=rank,
        terms=terms,
        coeffs=printed,
        corrected=corrected,
        axis=axis,
        fit_bases=bases,
        fit_multiplier=_type3_multiplier if kind == "t3" else None,
    )


_REGISTRY = {
    RelationId.H1: _RelationSpec("H", None, _h1_terms, _h1_coeffs, None, "z", ((0, 1), (0, 1), (0,))),
    RelationId.H2: _RelationSpec("H", None, _h2_terms, _h2_coeffs, None, "z", ((0, 1), (0, 1), (1,))),
    RelationId.H3: _RelationSpec("H", None, _h3_terms, _h3_coeffs, None, "z", ((0,), (0,))),
    RelationId.S1_STAR1: _make_s_spec("t1", 1),
    RelationId.S1_STAR2: _make_s_spec("t2", 1),
    RelationId.S1_STAR3: _make_s_spec("t3", 1),
    RelationId.S1_STAR4: _make_s_spec("t4", 1),
    RelationId.S1_STAR6: _make_s_spec("t5", 1),
    RelationId.S1_STAR7: _make_s_spec("t6", 1),
    RelationId.S2_101: _make_s_spec("t1", 2),
    RelationId.S2_102: _make_s_spec("t2", 2),
    RelationId.S2_103: _make_s_spec("t3", 2, printed_sign_flip=True),
    RelationId.S2_104: _make_s_spec("t4", 2),
    RelationId.S2_106: _make_s_spec("t5", 2),
    RelationId.S2_107: _make_s_spec("t6", 2),
    RelationId.SR_T514: _make_s_spec("t1", None),
    RelationId.SR_T515: _make_s_spec("t2", None),
    RelationId.SR_T516: _make_s_spec("t3", None),
    RelationId.SR_T517: _make_s_spec("t4", None),
    RelationId.SR_T518: _make_s_spec("t5", None),
    RelationId.SR_T519: _make_s_spec("t6", None),
}


def _as_relation_id(rid) -> RelationId:
    return rid if isinstance(rid, RelationId) else RelationId(str(rid))


def _check_rank(spec: _RelationSpec, params):
    if spec.family == "S" and spec.rank is not None and len(params["n"]) != spec.rank:
        raise ParameterRangeError(
            f"relation expects rank {spec.rank}, got multi-index of length {len(params['n'])}"
        )


def coefficients(rid, params, corrected: bool = False):
    """Printed coefficient values for the relation at these parameters.

    For the raw-3F2 relations the result is a list of (B, C) pairs with
    the z-multiplier structure (coefficient value = B + C z); the other
    families return plain scalars.  corrected=True substitutes the
    documented erratum fixes where they exist.
    """
    rid = _as_relation_id(rid)
    spec = _REGISTRY[rid]
    _check_rank(spec, params)
    fn = spec.corrected if (corrected and spec.corrected is not None) else spec.coeffs
    return fn(params)


def term_values(rid, params):
    """Evaluate the relation's shifted terms at these parameters."""
    rid = _as_relation_id(rid)
    spec = _REGISTRY[rid]
    _check_rank(spec, params)
    if spec.family == "H":
        m, s, z = _h_unpack(params)
        return [complex(eval_terminating(mm, ss, z)) for mm, ss in spec.terms(params)]
    n, a, b, x = _unpack(params)
    return [s_value(nn, aa, bb, x) for nn, aa, bb in spec.terms(params)]


def _coefficient_scalars(rid, params, corrected=False):
    spec = _REGISTRY[_as_relation_id(rid)]
    raw = coefficients(rid, params, corrected=corrected)
    if spec.family == "H":
        z = complex(params["z"])
        return [bc[0] + bc[1] * z for bc in raw]
    return [complex(c) for c in raw]


def residual(rid, params, corrected: bool = False) -> float:
    """Relative residual |sum c_k F_k| / max_k |c_k F_k| of the relation."""
    coeffs = _coefficient_scalars(rid, params, corrected=corrected)
    values = term_values(rid, params)
    products = [c * f for c, f in zip(coeffs, values)]
    scale = max(abs(p) for p in products)
    if scale == 0.0:
        return 0.0
    return abs(sum(products)) / scale


def sample_params(rid, rng: np.random.Generator, max_degree: int = 4, min_degree: int = 0) -> dict:
    """Draw one admissible parameter sample (guards satisfied) for the sweep.

    min_degree >= 1 keeps every term non-constant, which the brute-force
    fitter needs for a full-rank system.
    """
    rid = _as_relation_id(rid)
    spec = _REGISTRY[rid]
    for _ in range(200):
        try:
            if spec.family == "H":
                degree = int(rng.integers(max(1, min_degree), max_degree + 1))
                params = {
                    "m": (
                        float(rng.uniform(0.7, 2.5)),
                        -degree,
                        float(rng.uniform(0.7, 2.5)),
                    ),
                    "s": (float(rng.uniform(0.7, 2.5)), float(rng.uniform(0.7, 2.5))),
                    "z": float(rng.uniform(-0.9, 0.9)),
                }
            else:
                r = spec.rank if spec.rank is not None else int(rng.integers(2, 4))
                n = [int(rng.integers(min_degree, max_degree + 1)) for _ in range(r)]
                if spec.terms is _type1_terms:
                    n[0] = max(n[0], 1)
                params = {
                    "n": tuple(n),
                    "a": tuple(float(rng.uniform(0.7, 2.5)) for _ in range(r + 1)),
                    "b": tuple(float(rng.uniform(0.7, 2.5)) for _ in range(r + 1)),
                    "x": tuple(float(rng.uniform(-2.0, 2.0)) for _ in range(r)),
                }
            coefficients(rid, params)
            term_values(rid, params)
            return params
        except (DegenerateParameterError, ZeroDenominatorError):
            continue
    raise DegenerateParameterError(f"could not sample admissible parameters for {rid}")


@dataclass
class BruteForceResult:
    """Outcome of the least-squares coefficient re-derivation."""

    relation: RelationId
    fitted: list  # per non-fixed term: polynomial coefficients in the sweep coordinate
    fit_residual: float  # relation residual with fitted coefficients on fresh probes
    printed_deviation: float  # max relative gap between fitted and printed coefficients
    samples: int


def _with_point(spec: _RelationSpec, params, point, rng=None):
    # Replace the coordinate the coefficients depend on; refresh the other
    # coordinates too when a generator is supplied (richer term variation
    # keeps the least-squares system full-rank).
    updated = dict(params)
    if spec.axis == "z":
        updated["z"] = point
        return updated
    x = list(params["x"])
    if rng is not None:
        x = [float(rng.uniform(-2.0, 2.0)) for _ in x]
    if spec.axis == "first":
        x[0] = point
    else:
        x[-1] = point
    updated["x"] = tuple(x)
    return updated


def brute_force_coefficients(
    rid,
    params,
    sample_count: int | None = None,
    rng: np.random.Generator | None = None,
) -> BruteForceResult:
    """Re-derive the relation coefficients by least squares.

    The first term's coefficient is pinned to its printed value; the
    remaining coefficients are modelled as low-degree polynomials in the
    sweep coordinate (z, x_1, or x_r as appropriate, after clearing any
    coordinate-dependent denominator) and fitted over random sample
    points.  The result reports the residual of the fitted relation and
    the deviation of the fitted coefficients from the printed formulas.
    """
    rid = _as_relation_id(rid)
    spec = _REGISTRY[rid]
    rng = rng if rng is not None else np.random.default_rng(0)
    base = dict(params)
    if spec.family == "H":
        base.setdefault("z", 0.0)
    else:
        base.setdefault("x", (0.0,) * len(base["n"]))
    n_unknowns = sum(len(basis) for basis in spec.fit_bases)
    if sample_count is None:
        sample_count = 4 * n_unknowns
    if sample_count < 2 * n_unknowns:
        raise ParameterRangeError(f"need at least {2 * n_unknowns} samples")

    def draw_point():
        return float(rng.uniform(-0.9, 0.9)) if spec.axis == "z" else float(rng.uniform(-2.0, 2.0))

    def rows_for(point):
        local = _with_point(spec, base, point, rng=rng)
        values = term_values(rid, local)
        mult = spec.fit_multiplier(local) if spec.fit_multiplier else 1.0
        printed = coefficients(rid, local)
        if spec.family == "H":
            z = complex(local["z"])
            fixed = (printed[0][0] + printed[0][1] * z) * values[0]
        else:
            fixed = printed[0] * mult * values[0]
        row = []
        for k, basis in enumerate(spec.fit_bases, start=1):
            for power in basis:
                row.append(point**power * values[k])
        return row, -fixed, values, mult, printed

    matrix, target = [], []
    for _ in range(sample_count):
        row, rhs, *_ = rows_for(draw_point())
        matrix.append(row)
        target.append(rhs)
    matrix = np.asarray(matrix, dtype=complex)
    target = np.asarray(target, dtype=complex)
    solution, _, rank, _ = np.linalg.lstsq(matrix, target, rcond=None)
    if rank < n_unknowns:
        raise RankDeficientError(
            f"{rid}: samples determine only rank {rank} of {n_unknowns} unknowns"
        )
    fitted = []
    cursor = 0
    for basis in spec.fit_bases:
        fitted.append({p: solution[cursor + i] for i, p in enumerate(basis)})
        cursor += len(basis)

    def fitted_value(k, point):
        return sum(c * point**p for p, c in fitted[k - 1].items())

    fit_residual = 0.0
    printed_deviation = 0.0
    for _ in range(8):
        point = draw_point()
        row, rhs, values, mult, printed = rows_for(point)
        total = -rhs
        scale = abs(rhs)
        for k in range(1, len(values)):
            contrib = fitted_value(k, point) * values[k]
            total += contrib
            scale = max(scale, abs(contrib))
            if spec.family == "H":
                z = point
                printed_k = printed[k][0] + printed[k][1] * z
            else:
                printed_k = printed[k] * mult
            gap = abs(fitted_value(k, point) - printed_k) / (1.0 + abs(printed_k))
            printed_deviation = max(printed_deviation, gap)
        fit_residual = max(fit_residual, abs(total) / max(scale, 1e-300))
    return BruteForceResult(rid, fitted, fit_residual, printed_deviation, sample_count)
