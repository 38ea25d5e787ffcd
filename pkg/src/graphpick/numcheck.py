"""Floating-point cross-checks for the exact machinery.

Double-precision evaluation of rational functions, seeded sampling of the
upper-halfplane positivity and real-boundary reality of representing
functions, and an LU resolvent oracle.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from .graphs import ColoredGraph
from .nevanlinna import representing_function
from .ratfun import RatFun

POLE_GUARD = 1e-12
IMAG_TOL = 1e-9
_MAX_REDRAWS = 10_000


def eval_complex(r: RatFun, z: complex, w: complex, lam: complex = 0j) -> complex:
    den = r.den.evaluate(z, w, lam)
    if abs(den) <= POLE_GUARD:
        raise ValueError("pole proximity")
    return r.num.evaluate(z, w, lam) / den


@dataclass(frozen=True)
class SampleReport:
    """Outcome of a seeded sampling run; reproducible from the seed."""

    samples: int
    worst_imag: float
    worst_residual: float
    seed: int
    passed: bool

    def to_json(self) -> dict:
        return {
            "samples": self.samples,
            "worst_imag": self.worst_imag,
            "worst_residual": self.worst_residual,
            "seed": self.seed,
            "pass": self.passed,
        }


def pick_property_sample(
    g: ColoredGraph, count: int = 1000, seed: int = 0
) -> SampleReport:
    """Sample the halfplane-positivity and boundary-reality of f_G.

    Draws ``count`` points of the upper-halfplane square and ``count``
    real pairs (redrawing real points that land too close to a pole) and
    records the worst imaginary part seen on each side.
    """
    if not g.is_zw_colored():
        raise ValueError("Pick property not asserted for general colors")
    f = representing_function(g)
    rng = random.Random(seed)

    worst_imag = float("inf")
    drawn = 0
    attempts = 0
    while drawn < count:
        if attempts > count + _MAX_REDRAWS:
            raise ValueError("pole proximity: could not place samples")
        attempts += 1
        zz = complex(rng.uniform(-5, 5), 5.0 * (1.0 - rng.random()))
        ww = complex(rng.uniform(-5, 5), 5.0 * (1.0 - rng.random()))
        try:
            value = eval_complex(f, zz, ww)
        except ValueError:
            continue
        worst_imag = min(worst_imag, value.imag)
        drawn += 1

    worst_residual = 0.0
    drawn = 0
    attempts = 0
    while drawn < count:
        if attempts > count + _MAX_REDRAWS:
            raise ValueError("pole proximity: could not place real samples")
        attempts += 1
        x = rng.uniform(-5, 5)
        y = rng.uniform(-5, 5)
        try:
            value = eval_complex(f, complex(x, 0.0), complex(y, 0.0))
        except ValueError:
            continue
        worst_residual = max(worst_residual, abs(value.imag))
        drawn += 1

    passed = worst_imag >= -IMAG_TOL and worst_residual <= IMAG_TOL
    return SampleReport(count, worst_imag, worst_residual, seed, passed)


def resolvent_oracle(g: ColoredGraph, k: int, z: complex, w: complex) -> complex:
    """Numeric (k, k) resolvent entry by LU solve with partial pivoting."""
    n = g.n
    if not (1 <= k <= n):
        raise ValueError(f"vertex {k} out of range 1..{n}")
    matrix = np.zeros((n, n), dtype=complex)
    for v in range(1, n + 1):
        d = g.color(v).diagonal()
        matrix[v - 1, v - 1] = eval_complex(d, z, w)
    for i, j in g.edges:
        matrix[i - 1, j - 1] = 1.0
        matrix[j - 1, i - 1] = 1.0
    rhs = np.zeros(n, dtype=complex)
    rhs[k - 1] = 1.0
    try:
        x = np.linalg.solve(matrix, rhs)
    except np.linalg.LinAlgError as exc:
        raise ValueError(f"numerically singular colored matrix: {exc}") from exc
    return complex(x[k - 1])
