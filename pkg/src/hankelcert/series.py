"""Truncated formal power series with exact coefficients.

A :class:`TruncatedSeries` of order ``N`` knows the coefficients of
``z**0 .. z**N`` and nothing beyond.  Every operation returns a series whose
order never exceeds what the operands actually determine.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .scalar import Scalar, as_scalar, scalar_from_json, scalar_to_json, simplify

DEFAULT_ORDER = 9


@dataclass(frozen=True)
class TruncatedSeries:
    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("series order must be nonnegative")
        coeffs = tuple(as_scalar(c) for c in self.coeffs)
        if len(coeffs) != self.order + 1:
            raise ValueError(
                f"series of order {self.order} needs {self.order + 1} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, order: int | None = None) -> "TruncatedSeries":
        """Build from leading coefficients, zero-padding up to ``order``.

        Padding is only correct when the omitted coefficients really are
        zero (polynomials such as ``z**2`` or ``phi``).
        """
        coeffs = list(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if len(coeffs) > order + 1:
            coeffs = coeffs[: order + 1]
        coeffs += [0] * (order + 1 - len(coeffs))
        return cls(order, tuple(coeffs))

    @classmethod
    def constant(cls, c, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls.from_coeffs([c], order)

    @classmethod
    def monomial(cls, k: int, order: int = DEFAULT_ORDER, c=1) -> "TruncatedSeries":
        return cls.from_coeffs([0] * k + [c], order)

    def __getitem__(self, k: int) -> Scalar:
        if k < 0 or k > self.order:
            raise IndexError(f"coefficient z^{k} unknown for series of order {self.order}")
        return self.coeffs[k]

    def __len__(self):
        return self.order + 1

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def valuation(self) -> int:
        """Index of the first nonzero coefficient (``order + 1`` if none)."""
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return self.order + 1

    def __add__(self, other):
        return linear_combine(1, self, 1, _lift(other, self.order))

    __radd__ = __add__

    def __sub__(self, other):
        return linear_combine(1, self, -1, _lift(other, self.order))

    def __rsub__(self, other):
        return linear_combine(1, _lift(other, self.order), -1, self)

    def __neg__(self):
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return multiply(self, other)
        c = as_scalar(other)
        return TruncatedSeries(self.order, tuple(c * a for a in self.coeffs))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TruncatedSeries):
            return divide(self, other)
        c = as_scalar(other)
        return TruncatedSeries(self.order, tuple(a / c for a in self.coeffs))

    def __str__(self):
        terms = []
        for k, c in enumerate(self.coeffs):
            c = simplify(c)
            if c == 0:
                continue
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            if k and c == 1:
                terms.append(mono)
            else:
                cs = f"({c})" if not isinstance(c, Fraction) or c.denominator != 1 or c < 0 else str(c)
                terms.append(cs + ("*" + mono if mono else ""))
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(z^{self.order + 1})"

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [scalar_to_json(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, obj: dict) -> "TruncatedSeries":
        try:
            order = obj["order"]
            coeffs = obj["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed series literal: {obj!r}") from exc
        if not isinstance(order, int):
            raise ValueError("series order must be an integer")
        return cls(order, tuple(scalar_from_json(c) for c in coeffs))


def _lift(x, order: int) -> TruncatedSeries:
    if isinstance(x, TruncatedSeries):
        return x
    return TruncatedSeries.constant(x, order)


def linear_combine(a, s: TruncatedSeries, b, t: TruncatedSeries) -> TruncatedSeries:
    """Coefficientwise ``a*s + b*t``; the result order is the smaller one."""
    a, b = as_scalar(a), as_scalar(b)
    n = min(s.order, t.order)
    return TruncatedSeries(n, tuple(a * s.coeffs[k] + b * t.coeffs[k] for k in range(n + 1)))


def multiply(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    n = min(s.order, t.order)
    out = []
    for k in range(n + 1):
        acc = Fraction(0)
        for i in range(k + 1):
            if s.coeffs[i] and t.coeffs[k - i]:
                acc = acc + s.coeffs[i] * t.coeffs[k - i]
        out.append(acc)
    return TruncatedSeries(n, tuple(out))


def compose(outer: TruncatedSeries, inner: TruncatedSeries) -> TruncatedSeries:
    """``outer(inner(z))`` for ``inner(0) = 0``.

    If ``inner`` has valuation ``v``, the coefficient ``outer[k]`` first
    contributes at ``z**(k*v)``, so the result is determined through
    ``min(order(inner), v*(order(outer)+1) - 1)``.
    """
    if inner.coeffs[0] != 0:
        raise ValueError("composition requires vanishing constant term")
    v = inner.valuation()
    n = min(inner.order, v * (outer.order + 1) - 1)
    inner = inner.truncate(n)
    # Horner: outer[M] , outer[M-1] + inner*acc , ...
    acc = TruncatedSeries.constant(outer.coeffs[outer.order], n)
    for k in range(outer.order - 1, -1, -1):
        acc = multiply(acc, inner)
        acc = TruncatedSeries(n, (acc.coeffs[0] + outer.coeffs[k],) + acc.coeffs[1:])
    return acc


def derivative(s: TruncatedSeries) -> TruncatedSeries:
    if s.order == 0:
        raise ValueError("derivative of an order-0 series has no known coefficients")
    return TruncatedSeries(s.order - 1, tuple(k * s.coeffs[k] for k in range(1, s.order + 1)))


def series_exp(s: TruncatedSeries) -> TruncatedSeries:
    """``exp(s)`` for ``s(0) = 0`` via ``n*E[n] = sum_k k*s[k]*E[n-k]``."""
    if s.coeffs[0] != 0:
        raise ValueError("exponential requires vanishing constant term")
    e = [Fraction(1)]
    for n in range(1, s.order + 1):
        acc = Fraction(0)
        for k in range(1, n + 1):
            if s.coeffs[k]:
                acc = acc + k * s.coeffs[k] * e[n - k]
        e.append(acc / n)
    return TruncatedSeries(s.order, tuple(e))


def integrate_from_zero(s: TruncatedSeries) -> TruncatedSeries:
    return TruncatedSeries(
        s.order + 1,
        (Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(s.coeffs)),
    )


def divide(s: TruncatedSeries, t: TruncatedSeries) -> TruncatedSeries:
    if t.coeffs[0] == 0:
        raise ZeroDivisionError("division by series with zero constant term")
    n = min(s.order, t.order)
    t0 = t.coeffs[0]
    q: list = []
    for k in range(n + 1):
        acc = s.coeffs[k]
        for i in range(1, k + 1):
            if t.coeffs[i]:
                acc = acc - t.coeffs[i] * q[k - i]
        q.append(acc / t0)
    return TruncatedSeries(n, tuple(q))


def divide_by_z(s: TruncatedSeries) -> TruncatedSeries:
    if s.coeffs[0] != 0:
        raise ValueError("divide_by_z requires vanishing constant term")
    if s.order == 0:
        raise ValueError("divide_by_z of an order-0 series leaves no known coefficients")
    return TruncatedSeries(s.order - 1, s.coeffs[1:])


def series(coeffs: Iterable, order: int | None = None) -> TruncatedSeries:
    """Shorthand for :meth:`TruncatedSeries.from_coeffs`."""
    return TruncatedSeries.from_coeffs(list(coeffs), order)
