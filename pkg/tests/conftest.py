"""Shared test fixtures: exact-arithmetic oracles and hypothesis profiles.

The polynomial integration oracle works in Fractions so worked-example
regressions compare the implementation against values derived by a genuinely
independent route (symbolic antiderivatives, not quadrature).
"""

from fractions import Fraction

import numpy as np
from hypothesis import HealthCheck, settings

settings.register_profile(
    "fast",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("fast")


def poly_mul(p, q):
    """Multiply coefficient lists (ascending powers) exactly."""
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += Fraction(a) * Fraction(b)
    return out


def poly_integral(p, lo=0, hi=1):
    """Exact integral of the coefficient list `p` over [lo, hi]."""
    lo, hi = Fraction(lo), Fraction(hi)
    total = Fraction(0)
    for k, c in enumerate(p):
        total += Fraction(c) * (hi ** (k + 1) - lo ** (k + 1)) / (k + 1)
    return total


def weighted_poly_inner(f, g, weight=(1,), lo=0, hi=1):
    """Exact integral of f*g*weight over [lo, hi]; real coefficients only."""
    return poly_integral(poly_mul(poly_mul(f, g), list(weight)), lo, hi)


def rand_coords(rng, dim, field):
    re = rng.uniform(-3.0, 3.0, dim)
    if field == "complex":
        return re + 1j * rng.uniform(-3.0, 3.0, dim)
    return re


def close(a, b, tol=1e-10):
    return abs(float(a) - float(b)) <= tol
