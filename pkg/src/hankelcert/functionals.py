"""Coefficient maps a2..a5 and the Hankel determinant functionals.

Two closed-form routes to ``(a2, a3, a4, a5)`` are provided, one from the
Caratheodory coefficients of ``p`` and one from the Schwarz coefficients of
``w = (p - 1)/(p + 1)``, together with the normalized polynomials
``2304*H2(2)`` and ``69120*H3(1)`` used by the theorem pipelines.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .scalar import Scalar, abs2, as_number, as_scalar, simplify
from .series import TruncatedSeries, divide

H2_SCALE = 2304
H3_SCALE = 69120


@dataclass(frozen=True)
class CoefficientVector:
    a2: Scalar
    a3: Scalar
    a4: Scalar
    a5: Scalar

    def as_tuple(self):
        return (self.a2, self.a3, self.a4, self.a5)

    @classmethod
    def from_series(cls, f: TruncatedSeries) -> "CoefficientVector":
        if f.order < 5:
            raise ValueError("need f through z^5")
        if f[0] != 0 or f[1] != 1:
            raise ValueError("f must satisfy f(0) = 0, f'(0) = 1")
        return cls(*(simplify(f[k]) for k in range(2, 6)))


@dataclass(frozen=True)
class CaratheodoryCoeffs:
    p1: Scalar
    p2: Scalar
    p3: Scalar
    p4: Scalar

    def __post_init__(self):
        for name in ("p1", "p2", "p3", "p4"):
            object.__setattr__(self, name, as_number(getattr(self, name)))

    def as_tuple(self):
        return (self.p1, self.p2, self.p3, self.p4)

    def within_bounds(self) -> bool:
        """``|p_n| <= 2`` for every coefficient, checked exactly."""
        return all(abs2(p) <= 4 for p in self.as_tuple())


@dataclass(frozen=True)
class SchwarzCoeffs:
    c1: Scalar
    c2: Scalar
    c3: Scalar
    c4: Scalar

    def __post_init__(self):
        for name in ("c1", "c2", "c3", "c4"):
            object.__setattr__(self, name, as_number(getattr(self, name)))

    def as_tuple(self):
        return (self.c1, self.c2, self.c3, self.c4)

    def within_bounds(self) -> bool:
        return all(abs2(c) <= 1 for c in self.as_tuple())

    def as_series(self, order: int = 4) -> TruncatedSeries:
        return TruncatedSeries.from_coeffs((0,) + self.as_tuple(), order)


def coeffs_from_caratheodory(p: CaratheodoryCoeffs) -> CoefficientVector:
    p1, p2, p3, p4 = p.as_tuple()
    a2 = p1 / 4
    a3 = (p1**2 + 8 * p2) / 96
    a4 = (-(p1**3) + 32 * p3) / 768
    a5 = (11 * p1**4 - 48 * p1**2 * p2 - 64 * p1 * p3 - 96 * p2**2 + 768 * p4) / 30720
    return CoefficientVector(*(simplify(a) for a in (a2, a3, a4, a5)))


def coeffs_from_schwarz(c: SchwarzCoeffs) -> CoefficientVector:
    c1, c2, c3, c4 = c.as_tuple()
    a2 = c1 / 2
    a3 = (5 * c1**2 + 4 * c2) / 24
    a4 = (-2 * c1**3 + c1 * c2 + Fraction(3, 4) * c1 * (5 * c1**2 + 4 * c2) + 2 * c3) / 24
    a5 = (43 * c1**4 + 184 * c1**2 * c2 + 72 * c2**2 + 176 * c1 * c3 + 96 * c4) / 1920
    return CoefficientVector(*(simplify(a) for a in (a2, a3, a4, a5)))


def caratheodory_to_schwarz(p: CaratheodoryCoeffs) -> SchwarzCoeffs:
    """Coefficients of ``w = (p - 1)/(p + 1)`` through ``z**4``."""
    ps = TruncatedSeries.from_coeffs((1,) + p.as_tuple(), 4)
    w = divide(ps - 1, ps + 1)
    return SchwarzCoeffs(*(simplify(w[k]) for k in range(1, 5)))


def hankel_h2(a: CoefficientVector) -> Scalar:
    return simplify(a.a2 * a.a4 - a.a3**2)


def hankel_h3(a: CoefficientVector) -> Scalar:
    a2, a3, a4, a5 = a.as_tuple()
    return simplify(a3 * (a2 * a4 - a3**2) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2**2))


def _det(m: list) -> Scalar:
    """Exact determinant by fraction-preserving Gaussian elimination."""
    m = [list(row) for row in m]
    n = len(m)
    det: Scalar = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            det = -det
        det = det * m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                factor = m[r][col] / m[col][col]
                for k in range(col, n):
                    m[r][k] = m[r][k] - factor * m[col][k]
    return simplify(det)


def hankel_generic(coeffs: Sequence, q: int, n: int) -> Scalar:
    """The ``q x q`` Hankel determinant built from ``a_n .. a_{n+2q-2}``.

    ``coeffs[k]`` is ``a_{k+1}``, so ``coeffs[0]`` must be ``a_1 = 1``.
    """
    if q < 1 or n < 1:
        raise ValueError("q and n must be positive")
    coeffs = [as_scalar(c) for c in coeffs]
    if not coeffs or coeffs[0] != 1:
        raise ValueError("coefficient list must start with a_1 = 1")
    need = n + 2 * q - 2
    if len(coeffs) < need:
        raise ValueError(f"H_{q}({n}) needs a_1..a_{need}, got {len(coeffs)} coefficients")
    m = [[coeffs[n - 1 + i + j] for j in range(q)] for i in range(q)]
    return _det(m)


def h2_normalized_from_p(p1, p2, p3) -> Scalar:
    """``2304*H2(2)`` as a quartic in ``p1, p2, p3``."""
    p1, p2, p3 = as_scalar(p1), as_scalar(p2), as_scalar(p3)
    return simplify(-(p1**4) - 4 * p1**2 * p2 - 16 * p2**2 + 24 * p1 * p3)


def h3_normalized_from_c(c: SchwarzCoeffs) -> Scalar:
    """``69120*H3(1)`` as a sextic in the Schwarz coefficients."""
    c1, c2, c3, c4 = c.as_tuple()
    return simplify(
        -7 * c1**6
        + 42 * c1**4 * c2
        + 96 * c1**3 * c3
        + 96 * c1 * c2 * c3
        - 12 * c1**2 * (17 * c2**2 + 12 * c4)
        + 16 * (7 * c2**3 - 30 * c3**2 + 36 * c2 * c4)
    )
