"""Exact scalars: rationals and Gaussian rationals.

Real quantities are plain :class:`fractions.Fraction` values.  Complex
quantities use :class:`GaussianRational`, a pair of fractions.  Mixed
arithmetic between the two promotes to :class:`GaussianRational`.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from typing import Union


class GaussianRational:
    """A complex number ``re + i*im`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", Fraction(re))
        object.__setattr__(self, "im", Fraction(im))

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    # -- construction helpers -------------------------------------------
    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, (int, Fraction, Rational)):
            return cls(x, 0)
        raise TypeError(f"cannot make a Gaussian rational from {x!r}")

    # -- arithmetic -----------------------------------------------------
    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(self.re * other, self.im * other)
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        d = o.abs2()
        if d == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        num = self * o.conjugate()
        return GaussianRational(num.re / d, num.im / d)

    def __rtruediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / (self ** (-n))
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return math.hypot(self.re, self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        if isinstance(other, complex):
            return complex(self) == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        if self.re == 0:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"


Scalar = Union[Fraction, GaussianRational]

I = GaussianRational(0, 1)


def as_scalar(x) -> Scalar:
    """Convert ``x`` to an exact scalar.

    Accepts ints, fractions, ``"p/q"`` strings, Gaussian rationals and
    Python complex numbers whose parts are exactly representable floats.
    Plain floats are converted exactly (binary expansion), never rounded.
    """
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, (int, Fraction, float, str)):
        return Fraction(x)
    if isinstance(x, complex):
        return GaussianRational(Fraction(x.real), Fraction(x.imag))
    if isinstance(x, Rational):
        return Fraction(x.numerator, x.denominator)
    raise TypeError(f"not a scalar: {x!r}")


def as_number(x):
    """Like :func:`as_scalar` but passes floats and complex numbers through.

    Used where a value may legitimately be floating (search samples).
    """
    if isinstance(x, (float, complex)):
        return complex(x) if isinstance(x, complex) else x
    return as_scalar(x)


def simplify(x: Scalar) -> Scalar:
    """Collapse a Gaussian rational with zero imaginary part to a Fraction."""
    if isinstance(x, GaussianRational) and x.im == 0:
        return x.re
    return x


def conj(x: Scalar) -> Scalar:
    if isinstance(x, GaussianRational):
        return x.conjugate()
    return x


def abs2(x: Scalar) -> Fraction:
    """Squared modulus, exact."""
    if isinstance(x, GaussianRational):
        return x.abs2()
    if isinstance(x, (float, complex)):
        return abs(x) ** 2
    return Fraction(x) * Fraction(x)


def is_real(x) -> bool:
    return not isinstance(x, GaussianRational) or x.im == 0


def real_part(x) -> Fraction:
    return x.re if isinstance(x, GaussianRational) else Fraction(x)


def exact_sqrt(q: Fraction) -> Fraction | None:
    """Return ``sqrt(q)`` if it is rational, else ``None``."""
    q = Fraction(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def exact_abs(x: Scalar) -> Fraction | None:
    """Modulus of ``x`` when it is rational (always true for real ``x``)."""
    if isinstance(x, GaussianRational):
        return exact_sqrt(x.abs2())
    return abs(Fraction(x))


def to_complex(x) -> complex:
    if isinstance(x, GaussianRational):
        return complex(x)
    return complex(float(x))


# -- JSON wire format ------------------------------------------------------

def rational_to_json(q: Fraction, decimal: bool = False) -> dict:
    q = Fraction(q)
    out = {"num": q.numerator, "den": q.denominator}
    if decimal:
        out["decimal"] = float(q)
    return out


def rational_from_json(obj) -> Fraction:
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    if not isinstance(obj, dict) or "num" not in obj:
        raise ValueError(f"malformed rational: {obj!r}")
    den = obj.get("den", 1)
    if not isinstance(obj["num"], int) or not isinstance(den, int):
        raise ValueError(f"rational parts must be integers: {obj!r}")
    if den == 0:
        raise ValueError("rational with zero denominator")
    return Fraction(obj["num"], den)


def scalar_to_json(x: Scalar, decimal: bool = False) -> dict:
    x = simplify(x)
    if isinstance(x, GaussianRational):
        return {"re": rational_to_json(x.re, decimal), "im": rational_to_json(x.im, decimal)}
    return rational_to_json(x, decimal)


def scalar_from_json(obj) -> Scalar:
    if isinstance(obj, dict) and "re" in obj:
        return GaussianRational(rational_from_json(obj["re"]), rational_from_json(obj.get("im", 0)))
    return rational_from_json(obj)
