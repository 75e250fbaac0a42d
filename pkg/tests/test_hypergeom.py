import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from orthosimplex import (
    NonTerminatingSeriesError,
    ZeroDenominatorError,
    eval_terminating,
    hyp3f2,
    pochhammer,
    termination_index,
)


def test_zero_degree_is_one():
    assert eval_terminating((0.0, 2.7, -4.2), (1.1, 0.3), 1.0) == 1.0


def test_degree_one_two_term_sum():
    b, c, z = 2.5, 1.75, 0.6
    assert eval_terminating((-1.0, b), (c,), z) == pytest.approx(1.0 - b * z / c, rel=1e-15)


def test_three_term_example():
    assert hyp3f2((-1.0, 5.0, 2.0), (3.0, 4.0), 1.0) == pytest.approx(1.0 / 6.0, rel=1e-14)


def test_termination_index_picks_smallest():
    assert termination_index((-3.0, -1.0, 4.0)) == 1


def test_non_terminating_rejected():
    with pytest.raises(NonTerminatingSeriesError):
        eval_terminating((0.5, 1.0), (2.0,), 0.3)


def test_zero_denominator_rejected():
    with pytest.raises(ZeroDenominatorError):
        eval_terminating((-2.0, 1.0), (-1.0,), 1.0)


def test_denominator_zero_outside_range_is_fine():
    # the offending factor would first appear at k = 4 > n = 2
    value = eval_terminating((-2.0, 1.0), (-3.5,), 1.0)
    assert np.isfinite(value.real)


@given(st.data())
@settings(max_examples=150, deadline=None)
def test_numerator_permutation_symmetry(data):
    n = data.draw(st.integers(min_value=0, max_value=6))
    b = data.draw(st.floats(min_value=0.3, max_value=4.0))
    c = data.draw(st.floats(min_value=0.3, max_value=4.0))
    d = data.draw(st.floats(min_value=0.5, max_value=4.0))
    e = data.draw(st.floats(min_value=0.5, max_value=4.0))
    one = hyp3f2((-n, b, c), (d, e), 1.0)
    two = hyp3f2((c, -n, b), (e, d), 1.0)
    # tolerance is relative to the largest term, the attainable accuracy
    # when the alternating sum cancels
    scale = max(
        abs(
            pochhammer(float(-n), k) * pochhammer(b, k) * pochhammer(c, k)
            / (pochhammer(d, k) * pochhammer(e, k) * math.factorial(k))
        )
        for k in range(n + 1)
    )
    assert abs(one - two) <= 1e-13 * max(scale, 1.0)


@given(
    st.integers(min_value=0, max_value=10),
    st.floats(min_value=0.2, max_value=5.0),
    st.floats(min_value=0.2, max_value=5.0),
)
@settings(max_examples=200, deadline=None)
def test_chu_vandermonde(n, b, c):
    lhs = eval_terminating((-n, b), (c,), 1.0)
    rhs = pochhammer(c - b, n) / pochhammer(c, n)
    assert lhs == pytest.approx(rhs, rel=1e-11, abs=1e-11)


def test_spurious_extra_terms_vanish():
    # direct summation two terms past the termination index changes nothing
    n, b, c, d, e = 3, 1.3, 2.2, 0.9, 1.7
    value = hyp3f2((-n, b, c), (d, e), 1.0)
    brute = 0.0
    for k in range(n + 3):
        brute += (
            pochhammer(float(-n), k)
            * pochhammer(b, k)
            * pochhammer(c, k)
            / (pochhammer(d, k) * pochhammer(e, k) * float(math.factorial(k)))
        )
    assert value == pytest.approx(brute, rel=1e-13)


def test_complex_argument_and_parameters():
    value = hyp3f2((-2.0, 1.0 + 0.5j, 0.7), (1.2, 0.8 - 0.1j), 1.0)
    brute = sum(
        pochhammer(-2.0 + 0j, k)
        * pochhammer(1.0 + 0.5j, k)
        * pochhammer(0.7 + 0j, k)
        / (pochhammer(1.2 + 0j, k) * pochhammer(0.8 - 0.1j, k) * math.factorial(k))
        for k in range(3)
    )
    assert value == pytest.approx(brute, rel=1e-13)
