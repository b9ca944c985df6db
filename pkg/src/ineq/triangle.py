"""Reverse triangle inequalities: bounds on ||x|| + ||y|| - ||x + y||.

Ball form: ||x - a|| <= r gives defect <= r.  Two-sided form: the condition
with a real pair 0 < m < M (against y) gives

    defect <= (sqrt(2)/2) * (M - m) / sqrt(M + m) * ||y||.

Intermediate routes used in the proofs, checked by the test suite:

    (||x|| + ||a||)^2 - ||x + a||^2 = 2(||x|| ||a|| - Re<x, a>) <= r^2
    ||x|| + ||y|| <= sqrt((M-m)^2/(2(M+m)) ||y||^2 + ||x+y||^2) <= bound + ||x+y||
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import ConditionReport, ScalarPair, in_closed_ball, two_sided_realpart
from .errors import PreconditionError
from .space import Vector, norm

#: Defects in [-NONNEG_CLAMP_REL * (||x||+||y||), 0) are rounding noise; clamp to 0.
NONNEG_CLAMP_REL = 1e-12


@dataclass(frozen=True)
class TriangleDefect:
    """Nonnegative triangle defect together with its certified bound."""

    defect: float
    bound: float
    admissibility: ConditionReport


def _defect(x: Vector, other: Vector) -> float:
    nx, no = norm(x), norm(other)
    d = nx + no - norm(x + other)
    if -NONNEG_CLAMP_REL * (nx + no) <= d < 0.0:
        d = 0.0
    return d


def triangle_reverse_ball(x: Vector, a: Vector, r: float) -> TriangleDefect:
    """Defect bound r under ||x - a|| <= r."""
    report = in_closed_ball(x, a, r)
    return TriangleDefect(_defect(x, a), float(r), report)


def triangle_reverse_pair(x: Vector, y: Vector, m: float, M: float) -> TriangleDefect:
    """Defect bound (sqrt(2)/2)(M-m)/sqrt(M+m) ||y|| under the (m, M) condition."""
    if not (M > m > 0):
        raise PreconditionError(f"need M > m > 0, got m={m}, M={M}")
    report = two_sided_realpart(x, y, ScalarPair(float(m), float(M)))
    bound = (0.5 ** 0.5) * (M - m) / (M + m) ** 0.5 * norm(y)
    return TriangleDefect(_defect(x, y), bound, report)
