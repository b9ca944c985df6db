"""Reverse triangle inequality defect bounds."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ineq import (
    PreconditionError,
    triangle_reverse_ball,
    triangle_reverse_pair,
    vector,
)

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False, width=64)


def test_ball_worked_example():
    rep = triangle_reverse_ball(vector([1, 0.5]), vector([1, 0]), 0.5)
    assert rep.defect == pytest.approx(1.25**0.5 + 1 - 4.25**0.5, abs=1e-10)
    assert rep.bound == pytest.approx(0.5, abs=1e-12)
    assert rep.admissibility.holds


def test_pair_worked_example():
    rep = triangle_reverse_pair(vector([2, 1]), vector([1, 1]), 1.0, 2.0)
    assert rep.defect == pytest.approx(5**0.5 + 2**0.5 - 13**0.5, abs=1e-10)
    # bound: (1/sqrt 2) (M-m)/sqrt(M+m) ||y|| = (1/sqrt 2)(1/sqrt 3) sqrt 2
    assert rep.bound == pytest.approx((0.5**0.5) * (1 / 3**0.5) * 2**0.5, abs=1e-10)
    assert rep.defect <= rep.bound


def test_collinear_pair_has_zero_defect():
    rep = triangle_reverse_pair(vector([1.5, 0]), vector([1, 0]), 1.0, 2.0)
    assert rep.defect == pytest.approx(0.0, abs=1e-12)
    assert rep.bound == pytest.approx((0.5**0.5) * (1 / 3**0.5), abs=1e-10)


def test_pair_requires_ordered_positive_range():
    with pytest.raises(PreconditionError):
        triangle_reverse_pair(vector([1, 0]), vector([1, 0]), 2.0, 1.0)
    with pytest.raises(PreconditionError):
        triangle_reverse_pair(vector([1, 0]), vector([1, 0]), 0.0, 1.0)
    with pytest.raises(PreconditionError):
        triangle_reverse_pair(vector([1, 0]), vector([1, 0]), -1.0, 2.0)


@given(st.lists(finite, min_size=2, max_size=4), st.lists(finite, min_size=2, max_size=4))
def test_defect_never_negative(xs, ys):
    if len(xs) != len(ys):
        ys = (ys + ys)[: len(xs)]
    rep = triangle_reverse_ball(vector(xs), vector(ys), 1.0)
    assert rep.defect >= 0.0  # clamped against rounding on collinear inputs


@given(st.integers(0, 2**32 - 1))
def test_admissible_pair_defect_within_bound(seed):
    rng = np.random.default_rng(seed)
    y = vector(rng.uniform(-2, 2, 3))
    if np.linalg.norm(y.coords) < 1e-3:
        y = vector([1.0, 0.0, 0.0])
    m = float(rng.uniform(0.1, 1.0))
    M = m + float(rng.uniform(0.1, 2.0))
    mid = 0.5 * (m + M)
    u = rng.normal(size=3)
    u /= np.linalg.norm(u)
    radius = 0.5 * (M - m) * float(np.linalg.norm(y.coords))
    x = vector(mid * np.asarray(y.coords) + rng.uniform(0, 0.999) * radius * u)
    rep = triangle_reverse_pair(x, y, m, M)
    assert rep.admissibility.holds
    assert rep.defect <= rep.bound + 1e-9 * (1 + rep.bound)
