"""Maximum of ``|A + B z + C z^2| + 1 - |z|^2`` over the closed unit disk.

Two independent routes: :func:`ykc_closed_form`, a piecewise formula keyed on
the sign of ``A*C``, and :func:`ykc_brute_force`, a polar grid search with
local zoom refinement.

``variant="printed"`` evaluates an alternative form with ``C**2 - 1`` in
place of ``C**-2 - 1`` and ``|A|+|B|+|C|`` in the first ``R`` branch.  It is
kept for comparison only: it misses the disk maximum on a large share of
inputs with ``A*C < 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

import numpy as np

Real = Union[Fraction, float]

BRANCHES = ("i-large-B", "i-small-B", "ii-first", "ii-second", "R-1", "R-2", "R-3")


@dataclass(frozen=True)
class YkcInput:
    A: Real
    B: Real
    C: Real

    def __post_init__(self):
        for name in ("A", "B", "C"):
            v = getattr(self, name)
            if isinstance(v, (int, str)):
                v = Fraction(v)
            elif isinstance(v, float):
                if not math.isfinite(v):
                    raise ValueError(f"{name} must be finite")
            elif not isinstance(v, Fraction):
                raise TypeError(f"{name} must be real, got {v!r}")
            object.__setattr__(self, name, v)

    @property
    def exact(self) -> bool:
        return all(isinstance(v, Fraction) for v in (self.A, self.B, self.C))


@dataclass(frozen=True)
class YkcResult:
    value: Real
    branch: str | None = None
    argmax_hint: complex | None = None


def ykc_closed_form(inp: YkcInput, variant: str = "standard") -> YkcResult:
    """Evaluate the piecewise formula, testing branches top-down.

    Exact for rational input except in branch ``R-3``, which needs a square
    root and is evaluated in double precision.
    """
    if variant not in ("standard", "printed"):
        raise ValueError(f"unknown variant {variant!r}")
    A, B, C = inp.A, inp.B, inp.C
    if not inp.exact:
        A, B, C = float(A), float(B), float(C)
    aA, aB, aC = abs(A), abs(B), abs(C)
    B2 = B * B

    if A * C >= 0:
        if aB >= 2 * (1 - aC):
            return YkcResult(aA + aB + aC, "i-large-B")
        return YkcResult(1 + aA + B2 / (4 * (1 - aC)), "i-small-B")

    # A*C < 0, so C != 0
    if variant == "standard":
        threshold = -4 * A * C * (1 / (C * C) - 1)
    else:
        threshold = -4 * A * C * (C * C - 1)
    if threshold <= B2 and aB < 2 * (1 - aC):
        return YkcResult(1 - aA + B2 / (4 * (1 - aC)), "ii-first")
    if B2 < min(4 * (1 + aC) ** 2, threshold):
        return YkcResult(1 + aA + B2 / (4 * (1 + aC)), "ii-second")

    if aC * (aB + 4 * aA) <= abs(A * B):
        value = aA + aB - aC if variant == "standard" else aA + aB + aC
        return YkcResult(value, "R-1")
    if abs(A * B) <= aC * (aB - 4 * aA):
        return YkcResult(-aA + aB + aC, "R-2")
    radicand = 1 - B2 / (4 * A * C)
    return YkcResult((aA + aC) * math.sqrt(float(radicand)), "R-3")


@lru_cache(maxsize=8)
def _polar_grid(radial: int, angular: int):
    r = np.linspace(0.0, 1.0, radial)
    t = 2.0 * np.pi * np.arange(angular) / angular
    x = r[:, None] * np.cos(t)[None, :]
    y = r[:, None] * np.sin(t)[None, :]
    x.setflags(write=False)
    y.setflags(write=False)
    return x, y


def _objective(A: float, B: float, C: float, x, y):
    re = A + B * x + C * (x * x - y * y)
    im = B * y + 2.0 * C * x * y
    return np.hypot(re, im) + 1.0 - (x * x + y * y)


_ZOOM_OFFSETS = np.linspace(-1.0, 1.0, 11)


def ykc_brute_force(
    inp: YkcInput,
    radial: int = 512,
    angular: int = 1024,
    candidates: int = 8,
    zoom_steps: int = 20,
) -> YkcResult:
    """Grid maximum of the objective, refined around the best local maxima.

    The grid's discrete local maxima (up to ``candidates`` of them, best
    first) are each refined by repeated 11x11 patch searches in Cartesian
    coordinates, halving the patch each step; patch points outside the disk
    are projected onto the unit circle.
    """
    if radial < 8 or angular < 8:
        raise ValueError("grid needs at least 8 radial and 8 angular steps")
    A, B, C = float(inp.A), float(inp.B), float(inp.C)
    x, y = _polar_grid(radial, angular)
    v = _objective(A, B, C, x, y)

    padded = np.pad(v, ((1, 1), (0, 0)), constant_values=-np.inf)
    neighbours = np.maximum.reduce(
        [padded[:-2], padded[2:], np.roll(v, 1, axis=1), np.roll(v, -1, axis=1)]
    )
    idx = np.argwhere(v >= neighbours)
    vals = v[idx[:, 0], idx[:, 1]]
    order = np.argsort(-vals, kind="stable")[:candidates]
    xc = x[idx[order, 0], idx[order, 1]].copy()
    yc = y[idx[order, 0], idx[order, 1]].copy()

    best = float(vals[order[0]])
    best_z = complex(xc[0], yc[0])
    h = max(1.0 / (radial - 1), 2.0 * np.pi / angular)
    rows = np.arange(len(xc))
    for _ in range(zoom_steps):
        px = xc[:, None, None] + h * _ZOOM_OFFSETS[None, :, None] + 0.0 * _ZOOM_OFFSETS[None, None, :]
        py = yc[:, None, None] + 0.0 * _ZOOM_OFFSETS[None, :, None] + h * _ZOOM_OFFSETS[None, None, :]
        m = np.hypot(px, py)
        scale = np.where(m > 1.0, 1.0 / np.where(m > 0.0, m, 1.0), 1.0)
        px = (px * scale).reshape(len(xc), -1)
        py = (py * scale).reshape(len(xc), -1)
        w = _objective(A, B, C, px, py)
        j = np.argmax(w, axis=1)
        xc, yc = px[rows, j], py[rows, j]
        top = int(np.argmax(w[rows, j]))
        if w[top, j[top]] > best:
            best = float(w[top, j[top]])
            best_z = complex(xc[top], yc[top])
        h *= 0.5
    return YkcResult(best, None, best_z)


@dataclass(frozen=True)
class YkcComparison:
    closed: YkcResult
    oracle: YkcResult
    deviation: float
    disagree: bool


def ykc_compare(inp: YkcInput, tol: float = 5e-6, radial: int = 512, angular: int = 1024) -> YkcComparison:
    """Run both routes; a deviation above ``tol`` is flagged, never resolved."""
    closed = ykc_closed_form(inp)
    oracle = ykc_brute_force(inp, radial, angular)
    dev = abs(float(closed.value) - oracle.value)
    return YkcComparison(closed, oracle, dev, dev > tol)
