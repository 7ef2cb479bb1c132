"""Parametrizations of Caratheodory and Schwarz coefficients, and samplers.

``lz_expand`` writes ``(p2, p3, p4)`` in terms of ``p1 in [0, 2]`` and three
points ``gamma, eta, rho`` of the closed unit disk; ``ps_expand`` does the
same for ``(c2, c3, c4)`` with ``c1 in [0, 1]``.  Parameters may be exact
(``Fraction`` / :class:`GaussianRational`) or Python complex numbers; exact
inputs give exact outputs.
"""

from __future__ import annotations

import cmath
import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Union

from .functionals import CaratheodoryCoeffs, SchwarzCoeffs
from .scalar import GaussianRational, abs2, as_scalar, conj, simplify

Param = Union[Fraction, GaussianRational, complex]


def _exact(x) -> bool:
    return isinstance(x, (int, Fraction, GaussianRational))


def _norm2(x):
    """``|x|**2``: exact for exact input, float for complex input."""
    if _exact(x):
        return abs2(x)
    return abs(x) ** 2


def _conj(x):
    return conj(x) if _exact(x) else complex(x).conjugate()


def _coerce(x):
    if isinstance(x, (complex, float)):
        return complex(x)
    return as_scalar(x)


def _check_disk(name: str, x) -> None:
    n2 = _norm2(x)
    if (n2 > 1) if _exact(x) else (n2 > 1 + 1e-12):
        raise ValueError(f"|{name}| must not exceed 1, got |{name}|^2 = {n2}")


@dataclass(frozen=True)
class LZParams:
    p1: Fraction
    gamma: Param
    eta: Param
    rho: Param

    def __post_init__(self):
        p1 = as_scalar(self.p1)
        if isinstance(p1, GaussianRational):
            if p1.im != 0:
                raise ValueError("p1 must be real")
            p1 = p1.re
        if not 0 <= p1 <= 2:
            raise ValueError(f"p1 must lie in [0, 2], got {p1}")
        object.__setattr__(self, "p1", p1)
        for name in ("gamma", "eta", "rho"):
            val = _coerce(getattr(self, name))
            _check_disk(name, val)
            object.__setattr__(self, name, val)

    @property
    def exact(self) -> bool:
        return all(_exact(v) for v in (self.gamma, self.eta, self.rho))


@dataclass(frozen=True)
class PSParams:
    c1: Fraction
    gamma: Param
    eta: Param
    rho: Param

    def __post_init__(self):
        c1 = as_scalar(self.c1)
        if isinstance(c1, GaussianRational):
            if c1.im != 0:
                raise ValueError("c1 must be real")
            c1 = c1.re
        if not 0 <= c1 <= 1:
            raise ValueError(f"c1 must lie in [0, 1], got {c1}")
        object.__setattr__(self, "c1", c1)
        for name in ("gamma", "eta", "rho"):
            val = _coerce(getattr(self, name))
            _check_disk(name, val)
            object.__setattr__(self, name, val)

    @property
    def exact(self) -> bool:
        return all(_exact(v) for v in (self.gamma, self.eta, self.rho))


def _finish(x):
    return simplify(x) if _exact(x) else complex(x)


def lz_expand(params: LZParams) -> CaratheodoryCoeffs:
    """``(p1, p2, p3, p4)`` from ``(p1, gamma, eta, rho)``."""
    p1, g, e, r = params.p1, params.gamma, params.eta, params.rho
    if not params.exact:
        p1, g, e, r = float(p1), complex(g), complex(e), complex(r)
    t = 4 - p1**2
    one_g = 1 - _norm2(g)
    one_e = 1 - _norm2(e)
    p2 = (p1**2 + g * t) / 2
    p3 = (p1**3 + 2 * t * p1 * g - t * p1 * g**2 + 2 * t * one_g * e) / 4
    p4 = (
        p1**4
        + t * g * (p1**2 * (g**2 - 3 * g + 3) + 4 * g)
        - 4 * t * one_g * (p1 * (g - 1) * e + _conj(g) * e**2 - one_e * r)
    ) / 8
    return CaratheodoryCoeffs(p1, _finish(p2), _finish(p3), _finish(p4))


def ps_expand(params: PSParams) -> SchwarzCoeffs:
    """``(c1, c2, c3, c4)`` from ``(c1, gamma, eta, rho)``."""
    c1, g, e, r = params.c1, params.gamma, params.eta, params.rho
    if not params.exact:
        c1, g, e, r = float(c1), complex(g), complex(e), complex(r)
    s = 1 - c1**2
    one_g = 1 - _norm2(g)
    one_e = 1 - _norm2(e)
    c2 = s * g
    c3 = s * (e * one_g - c1 * g**2)
    c4 = s * (c1**2 * g**3 - one_g * (2 * c1 * g * e + _conj(g) * e**2) + one_g * one_e * r)
    return SchwarzCoeffs(c1, _finish(c2), _finish(c3), _finish(c4))


# -- sampling --------------------------------------------------------------

# unimodular Gaussian rationals from Pythagorean triples, closed under
# conjugation and sign
_TRIPLES = ((1, 0, 1), (0, 1, 1), (3, 4, 5), (4, 3, 5), (5, 12, 13), (12, 5, 13), (8, 15, 17), (15, 8, 17), (7, 24, 25), (20, 21, 29))
UNIT_PHASES: tuple = tuple(
    sorted(
        {GaussianRational(Fraction(sx * a, c), Fraction(sy * b, c)) for a, b, c in _TRIPLES for sx in (1, -1) for sy in (1, -1)},
        key=lambda u: math.atan2(u.im, u.re) % (2 * math.pi),
    )
)

CORNER_LEVELS = (Fraction(0), Fraction(1, 2), Fraction(1))
ANGLE_POLICIES = ("mixed", "exact", "float")
_DENOM = 2**16


def corner_tuples(mode: str) -> list:
    """The 3**4 corner tuples: each of first coefficient, |gamma|, |eta|, |rho| in {0, 1/2, 1}."""
    top = Fraction(2) if mode == "lz" else Fraction(1)
    out = []
    for lvl, g, e, r in itertools.product(CORNER_LEVELS, repeat=4):
        first = lvl * top
        out.append(_make(mode, first, g, e, r))
    return out


def _make(mode, first, g, e, r):
    cls = LZParams if mode == "lz" else PSParams
    return cls(first, g, e, r)


def _rand_modulus(rng: random.Random) -> Fraction:
    u = rng.random()
    if u < 0.1:
        return Fraction(0)
    if u < 0.3:
        return Fraction(1)
    return Fraction(rng.randint(0, _DENOM), _DENOM)


def _rand_point(rng: random.Random, policy: str):
    m = _rand_modulus(rng)
    if policy == "exact" or (policy == "mixed" and rng.random() < 0.5):
        return m * rng.choice(UNIT_PHASES)
    theta = rng.uniform(0.0, 2.0 * math.pi)
    return float(m) * cmath.exp(1j * theta)


def iter_cuboid(seed: int, mode: str, angle_policy: str = "mixed") -> Iterator:
    """Endless deterministic stream: the 81 corners first, then random tuples."""
    if mode not in ("lz", "ps"):
        raise ValueError(f"mode must be 'lz' or 'ps', got {mode!r}")
    if angle_policy not in ANGLE_POLICIES:
        raise ValueError(f"angle policy must be one of {ANGLE_POLICIES}")
    yield from corner_tuples(mode)
    rng = random.Random(seed)
    top = 2 if mode == "lz" else 1
    while True:
        u = rng.random()
        if u < 0.05:
            first = Fraction(0)
        elif u < 0.1:
            first = Fraction(top)
        else:
            first = Fraction(rng.randint(0, _DENOM * top), _DENOM)
        yield _make(mode, first, *(_rand_point(rng, angle_policy) for _ in range(3)))


def sample_cuboid(seed: int, count: int, mode: str, angle_policy: str = "mixed") -> list:
    """``count`` parameter tuples; the first ``min(count, 81)`` are the corners."""
    if count < 1:
        raise ValueError("count must be at least 1")
    return list(itertools.islice(iter_cuboid(seed, mode, angle_policy), count))


def random_exact(seed: int, count: int, mode: str) -> list:
    """Random exact tuples only (no corners), for identity checks."""
    stream = iter_cuboid(seed, mode, "exact")
    return list(itertools.islice(stream, 81, 81 + count))


def params_to_json(params) -> dict:
    from .scalar import scalar_to_json

    def enc(x):
        if _exact(x):
            return scalar_to_json(x)
        x = complex(x)
        return {"re_float": x.real, "im_float": x.imag}

    first = "p1" if isinstance(params, LZParams) else "c1"
    return {
        first: scalar_to_json(getattr(params, first)),
        "gamma": enc(params.gamma),
        "eta": enc(params.eta),
        "rho": enc(params.rho),
    }
