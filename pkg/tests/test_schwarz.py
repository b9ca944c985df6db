"""Reverse Schwarz chains, ball and two-sided hypotheses."""

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ineq import (
    DegeneratePairError,
    FieldTag,
    PreconditionError,
    ScalarPair,
    reverse_schwarz_ball,
    reverse_schwarz_pair,
    vector,
)

finite = st.floats(-5, 5, allow_nan=False, allow_infinity=False, width=64)


def test_ball_worked_example():
    chain = reverse_schwarz_ball(vector([1, 0.5]), vector([1, 0]), 0.5)
    # oracle: gap3 = ||x|| ||a|| - Re<x,a> = sqrt(1.25) - 1
    assert chain.values[3] == pytest.approx(1.25**0.5 - 1.0, abs=1e-10)
    assert chain.values[4] == pytest.approx(0.125, abs=1e-12)
    assert chain.admissibility.holds
    assert chain.labels == ("zero", "abs_gap", "abs_real_gap", "real_gap", "bound")


def test_pair_worked_example():
    chain = reverse_schwarz_pair(vector([2, 1]), vector([1, 1]), ScalarPair(1, 2))
    assert chain.values[3] == pytest.approx(10**0.5 - 3.0, abs=1e-10)
    assert chain.values[4] == pytest.approx(1.0 / 6.0, abs=1e-10)
    assert chain.admissibility.holds
    assert chain.slack == pytest.approx(1.0 / 6.0 - (10**0.5 - 3.0), abs=1e-10)


def test_chain_is_nondecreasing_on_worked_examples():
    for chain in (
        reverse_schwarz_ball(vector([1, 0.5]), vector([1, 0]), 0.5),
        reverse_schwarz_pair(vector([2, 1]), vector([1, 1]), ScalarPair(1, 2)),
    ):
        vals = chain.values
        assert all(a <= b + 1e-12 for a, b in zip(vals, vals[1:]))


@given(st.lists(finite, min_size=2, max_size=4), st.integers(0, 2**32 - 1))
def test_ball_chain_monotone_for_admissible_instances(center, seed):
    rng = np.random.default_rng(seed)
    a = vector(center)
    r = float(rng.uniform(0.1, 2.0))
    direction = rng.normal(size=len(center))
    n = np.linalg.norm(direction)
    if n < 1e-12:
        direction[0] = 1.0
        n = 1.0
    x = vector(np.asarray(a.coords) + rng.uniform(0, 1) * r * direction / n)
    chain = reverse_schwarz_ball(x, a, r)
    assert chain.admissibility.holds
    tol = 1e-9 * (1.0 + abs(chain.values[-1]))
    vals = chain.values
    assert all(lhs <= rhs + tol for lhs, rhs in zip(vals, vals[1:]))


def test_complex_pair_instance():
    x = vector([2 + 1j, 1], FieldTag.COMPLEX)
    y = vector([1, 1], FieldTag.COMPLEX)
    chain = reverse_schwarz_pair(x, y, ScalarPair(1 - 0.5j, 2 + 1j))
    assert len(chain.values) == 5
    assert chain.values[-1] >= 0


def test_degenerate_pair_rejected():
    with pytest.raises(DegeneratePairError):
        reverse_schwarz_pair(vector([1, 0]), vector([0, 1]), ScalarPair(2, 2))
    with pytest.raises(DegeneratePairError):
        reverse_schwarz_pair(vector([1, 0]), vector([0, 1]), ScalarPair(-2, 2))


def test_ball_rejects_nonpositive_radius():
    with pytest.raises(PreconditionError):
        reverse_schwarz_ball(vector([1, 0]), vector([1, 0]), -1.0)


def test_inadmissible_instance_reports_not_raises():
    chain = reverse_schwarz_ball(vector([5, 5]), vector([1, 0]), 0.1)
    assert not chain.admissibility.holds
    assert len(chain.values) == 5  # chain computed regardless


def test_chain_as_dict_shape():
    chain = reverse_schwarz_ball(vector([1, 0.5]), vector([1, 0]), 0.5)
    doc = chain.as_dict()
    assert list(doc) == list(chain.labels)
    assert list(doc.values()) == list(chain.values)


def test_aligned_gap_uses_pair_phase():
    # rotating the pair by a unit phase must not change the chain over C
    x = vector([2, 1], FieldTag.COMPLEX)
    y = vector([1, 1], FieldTag.COMPLEX)
    phase = np.exp(0.7j)
    base = reverse_schwarz_pair(x, y, ScalarPair(1, 2))
    rotated = reverse_schwarz_pair(
        x.scaled(phase), y.scaled(phase), ScalarPair(1, 2)
    )
    np.testing.assert_allclose(rotated.values, base.values, atol=1e-10)
