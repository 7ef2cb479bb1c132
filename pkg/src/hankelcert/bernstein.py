"""Bernstein-basis range enclosures for bivariate polynomials.

Everything here is exact rational arithmetic.  A polynomial restricted to a
rectangle is mapped to the unit square, converted to tensor Bernstein form,
and bounded by its extreme coefficients.  :func:`certify_upper_bound`
subdivides until every piece is bounded, optionally closing a piece at the
origin with :func:`corner_certificate` when the bound is attained there.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterator, Mapping

STRATEGIES = ("paper-quadrants", "bisect-longest", "auto")
DEFAULT_MAX_DEPTH = 12


class CornerCertificateError(ValueError):
    """The quadratic-dominance corner certificate does not apply."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class BivariatePoly:
    """``sum coeffs[i][j] * p**i * x**j`` with exact rational coefficients."""

    coeffs: tuple

    def __post_init__(self):
        rows = tuple(tuple(_frac(c) for c in row) for row in self.coeffs)
        if not rows or not rows[0]:
            raise ValueError("coefficient matrix must be nonempty")
        if len({len(r) for r in rows}) != 1:
            raise ValueError("coefficient matrix must be rectangular")
        object.__setattr__(self, "coeffs", rows)

    # -- construction ---------------------------------------------------
    @classmethod
    def zero(cls, bidegree=(0, 0)) -> "BivariatePoly":
        m, n = bidegree
        return cls(tuple((Fraction(0),) * (n + 1) for _ in range(m + 1)))

    @classmethod
    def constant(cls, c) -> "BivariatePoly":
        return cls(((_frac(c),),))

    @classmethod
    def from_terms(cls, terms: Mapping, bidegree=None) -> "BivariatePoly":
        """Build from ``{(i, j): coefficient}``."""
        terms = {k: _frac(v) for k, v in terms.items()}
        if bidegree is None:
            m = max((i for i, _ in terms), default=0)
            n = max((j for _, j in terms), default=0)
        else:
            m, n = bidegree
        rows = [[Fraction(0)] * (n + 1) for _ in range(m + 1)]
        for (i, j), c in terms.items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            if i > m or j > n:
                if c != 0:
                    raise ValueError(f"term p^{i} x^{j} exceeds bidegree ({m}, {n})")
                continue
            rows[i][j] += c
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def var(cls, which: int) -> "BivariatePoly":
        """The coordinate ``p`` (``which=0``) or ``x`` (``which=1``)."""
        return cls.from_terms({(1, 0) if which == 0 else (0, 1): 1})

    # -- shape ----------------------------------------------------------
    @property
    def bidegree(self) -> tuple:
        return (len(self.coeffs) - 1, len(self.coeffs[0]) - 1)

    def true_bidegree(self) -> tuple:
        m = max((i for i, j, _ in self.terms()), default=0)
        n = max((j for i, j, _ in self.terms()), default=0)
        return (m, n)

    def terms(self) -> Iterator:
        for i, row in enumerate(self.coeffs):
            for j, c in enumerate(row):
                if c:
                    yield i, j, c

    def coefficient(self, i: int, j: int) -> Fraction:
        m, n = self.bidegree
        if 0 <= i <= m and 0 <= j <= n:
            return self.coeffs[i][j]
        return Fraction(0)

    def padded(self, bidegree) -> "BivariatePoly":
        m, n = bidegree
        if m < self.bidegree[0] or n < self.bidegree[1]:
            raise ValueError("padding cannot shrink a polynomial")
        return BivariatePoly.from_terms({(i, j): c for i, j, c in self.terms()}, (m, n))

    def trimmed(self) -> "BivariatePoly":
        return BivariatePoly.from_terms({(i, j): c for i, j, c in self.terms()}, self.true_bidegree())

    # -- arithmetic -----------------------------------------------------
    def _binary(self, other, sign: int) -> "BivariatePoly":
        if not isinstance(other, BivariatePoly):
            other = BivariatePoly.constant(other)
        m = max(self.bidegree[0], other.bidegree[0])
        n = max(self.bidegree[1], other.bidegree[1])
        return BivariatePoly(
            tuple(
                tuple(self.coefficient(i, j) + sign * other.coefficient(i, j) for j in range(n + 1))
                for i in range(m + 1)
            )
        )

    def __add__(self, other):
        return self._binary(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binary(other, -1)

    def __rsub__(self, other):
        return (-self)._binary(other, 1)

    def __neg__(self):
        return BivariatePoly(tuple(tuple(-c for c in row) for row in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, BivariatePoly):
            c = _frac(other)
            return BivariatePoly(tuple(tuple(c * a for a in row) for row in self.coeffs))
        m1, n1 = self.bidegree
        m2, n2 = other.bidegree
        out = [[Fraction(0)] * (n1 + n2 + 1) for _ in range(m1 + m2 + 1)]
        for i, j, a in self.terms():
            for k, l, b in other.terms():
                out[i + k][j + l] += a * b
        return BivariatePoly(tuple(tuple(r) for r in out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if not isinstance(e, int) or e < 0:
            return NotImplemented
        result = BivariatePoly.constant(1)
        for _ in range(e):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, BivariatePoly):
            if isinstance(other, (int, Fraction)):
                other = BivariatePoly.constant(other)
            else:
                return NotImplemented
        return dict(((i, j), c) for i, j, c in self.terms()) == dict(
            ((i, j), c) for i, j, c in other.terms()
        )

    def __hash__(self):
        return hash(frozenset(((i, j), c) for i, j, c in self.terms()))

    def __call__(self, p, x):
        """Horner evaluation; exact for rational arguments."""
        acc = 0
        for row in reversed(self.coeffs):
            inner = 0
            for c in reversed(row):
                inner = inner * x + c
            acc = acc * p + inner
        return acc

    def eval_float(self, p, x):
        """Double-precision Horner evaluation; works on numpy arrays."""
        acc = 0.0
        for row in reversed(self.coeffs):
            inner = 0.0
            for c in reversed(row):
                inner = inner * x + float(c)
            acc = acc * p + inner
        return acc

    # -- structure used by the corner certificate -------------------------
    def degree_part(self, d: int) -> "BivariatePoly":
        return BivariatePoly.from_terms(
            {(i, j): c for i, j, c in self.terms() if i + j == d}, self.bidegree
        )

    def min_total_degree(self) -> int | None:
        return min((i + j for i, j, _ in self.terms()), default=None)

    def __str__(self):
        parts = []
        for i, j, c in self.terms():
            mono = "*".join(s for s in (_pow("p", i), _pow("x", j)) if s)
            parts.append(f"({c})" + (f"*{mono}" if mono else ""))
        return " + ".join(parts) if parts else "0"

    # -- wire format ------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "bidegree": list(self.bidegree),
            "terms": [
                {"i": i, "j": j, "num": c.numerator, "den": c.denominator}
                for i, j, c in self.terms()
            ],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "BivariatePoly":
        try:
            m, n = obj["bidegree"]
            raw = obj["terms"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"malformed polynomial: {exc}") from exc
        if not all(isinstance(v, int) and v >= 0 for v in (m, n)):
            raise ValueError("bidegree entries must be nonnegative integers")
        terms: dict = {}
        for t in raw:
            try:
                i, j, num, den = t["i"], t["j"], t["num"], t.get("den", 1)
            except (KeyError, TypeError) as exc:
                raise ValueError(f"malformed term {t!r}") from exc
            if not all(isinstance(v, int) for v in (i, j, num, den)) or den == 0:
                raise ValueError(f"malformed term {t!r}")
            terms[(i, j)] = terms.get((i, j), Fraction(0)) + Fraction(num, den)
        return cls.from_terms(terms, (m, n))


def _pow(name: str, k: int) -> str:
    if k == 0:
        return ""
    return name if k == 1 else f"{name}^{k}"


P = BivariatePoly.var(0)
X = BivariatePoly.var(1)


@dataclass(frozen=True)
class Rectangle:
    """The closed box ``[a, b] x [c, d]``."""

    a: Fraction
    b: Fraction
    c: Fraction
    d: Fraction

    def __post_init__(self):
        for name in "abcd":
            object.__setattr__(self, name, _frac(getattr(self, name)))
        if not (self.a < self.b and self.c < self.d):
            raise ValueError(f"rectangle [{self.a},{self.b}]x[{self.c},{self.d}] has empty interior")

    @classmethod
    def unit(cls) -> "Rectangle":
        return cls(0, 1, 0, 1)

    @property
    def widths(self) -> tuple:
        return (self.b - self.a, self.d - self.c)

    def anchored_at_origin(self) -> bool:
        return self.a == 0 and self.c == 0

    def contains(self, p, x) -> bool:
        return self.a <= p <= self.b and self.c <= x <= self.d

    def quadrants(self) -> list:
        mp, mx = (self.a + self.b) / 2, (self.c + self.d) / 2
        return [
            Rectangle(self.a, mp, self.c, mx),
            Rectangle(self.a, mp, mx, self.d),
            Rectangle(mp, self.b, self.c, mx),
            Rectangle(mp, self.b, mx, self.d),
        ]

    def bisect_longest(self) -> list:
        wp, wx = self.widths
        if wp >= wx:
            m = (self.a + self.b) / 2
            return [Rectangle(self.a, m, self.c, self.d), Rectangle(m, self.b, self.c, self.d)]
        m = (self.c + self.d) / 2
        return [Rectangle(self.a, self.b, self.c, m), Rectangle(self.a, self.b, m, self.d)]

    def split(self, strategy: str) -> list:
        if strategy == "paper-quadrants":
            return self.quadrants()
        if strategy in ("bisect-longest", "auto"):
            return self.bisect_longest()
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")

    def to_json(self) -> list:
        return [str(v) for v in (self.a, self.b, self.c, self.d)]

    def __str__(self):
        return f"[{self.a},{self.b}]x[{self.c},{self.d}]"


@dataclass(frozen=True)
class BernsteinPatch:
    rect: Rectangle
    bidegree: tuple
    coeffs: tuple

    def range(self) -> tuple:
        return bernstein_range(self)


def _shift_scale_matrix(deg: int, lo: Fraction, width: Fraction) -> list:
    """``T[i][k]`` with ``(lo + width*u)**i = sum_k T[i][k] u**k``."""
    return [
        [comb(i, k) * lo ** (i - k) * width**k if k <= i else Fraction(0) for k in range(deg + 1)]
        for i in range(deg + 1)
    ]


def affine_restrict(poly: BivariatePoly, rect: Rectangle) -> BivariatePoly:
    """``q(u, v) = poly(a + (b-a) u, c + (d-c) v)``; bidegree is preserved."""
    m, n = poly.bidegree
    tp = _shift_scale_matrix(m, rect.a, rect.b - rect.a)
    tx = _shift_scale_matrix(n, rect.c, rect.d - rect.c)
    out = [[Fraction(0)] * (n + 1) for _ in range(m + 1)]
    for i, j, c in poly.terms():
        for k in range(i + 1):
            ck = c * tp[i][k]
            if not ck:
                continue
            for l in range(j + 1):
                out[k][l] += ck * tx[j][l]
    return BivariatePoly(tuple(tuple(r) for r in out))


@lru_cache(maxsize=None)
def _elevation_weights(deg: int) -> tuple:
    """``W[i][k] = C(i, k) / C(deg, k)``, cached exactly."""
    return tuple(
        tuple(Fraction(comb(i, k), comb(deg, k)) if k <= i else Fraction(0) for k in range(deg + 1))
        for i in range(deg + 1)
    )


def to_bernstein(poly: BivariatePoly, target_bidegree=None, rect: Rectangle | None = None) -> BernsteinPatch:
    """Bernstein coefficients on the unit square at the given bidegree.

    ``poly`` is taken to be already expressed in unit-square coordinates;
    ``rect`` only labels the patch.  Use :func:`bernstein_patch` to restrict
    and convert in one step.
    """
    M, N = target_bidegree if target_bidegree is not None else poly.bidegree
    tm, tn = poly.true_bidegree()
    if M < tm or N < tn:
        raise ValueError(f"target bidegree ({M}, {N}) is below the degree ({tm}, {tn})")
    wp, wx = _elevation_weights(M), _elevation_weights(N)
    terms = list(poly.terms())
    b = tuple(
        tuple(
            sum((wp[i][k] * wx[j][l] * c for k, l, c in terms if k <= i and l <= j), Fraction(0))
            for j in range(N + 1)
        )
        for i in range(M + 1)
    )
    return BernsteinPatch(rect or Rectangle.unit(), (M, N), b)


def bernstein_patch(poly: BivariatePoly, rect: Rectangle, target_bidegree=None) -> BernsteinPatch:
    return to_bernstein(affine_restrict(poly, rect), target_bidegree or poly.bidegree, rect)


def bernstein_range(patch: BernsteinPatch) -> tuple:
    flat = [c for row in patch.coeffs for c in row]
    return (min(flat), max(flat))


# -- corner certificate ----------------------------------------------------

def degree_abs_sums(poly: BivariatePoly) -> dict:
    """``{d: sum of |coefficients| of total degree d}`` over nonzero terms."""
    sums: dict = {}
    for i, j, c in poly.terms():
        sums[i + j] = sums.get(i + j, Fraction(0)) + abs(c)
    return dict(sorted(sums.items()))


def monomial_tail_bound(poly: BivariatePoly, s) -> Fraction:
    """``K`` with ``|R(p, x)| <= K (p^2 + x^2)`` on ``[0, s]^2``.

    Uses ``p^i x^j <= s^(i+j-2) (p^2 + x^2)`` there, valid when every
    monomial has total degree at least 3.
    """
    s = _frac(s)
    if s <= 0:
        raise ValueError("corner size must be positive")
    low = poly.min_total_degree()
    if low is not None and low <= 2:
        raise ValueError(f"monomial of total degree {low} present; tail bound needs degree >= 3")
    return sum((total * s ** (d - 2) for d, total in degree_abs_sums(poly).items()), Fraction(0))


@dataclass(frozen=True)
class CornerCertificate:
    quadratic: tuple
    quadratic_floor: Fraction
    tail_constant: Fraction
    margin: Fraction
    corner_size: Fraction

    @property
    def certified(self) -> bool:
        return self.margin > 0


def corner_certificate_detail(F: BivariatePoly, s) -> CornerCertificate:
    s = _frac(s)
    if F.coefficient(0, 0) != 0 or F.coefficient(1, 0) != 0 or F.coefficient(0, 1) != 0:
        raise CornerCertificateError("corner certificate inapplicable: constant or linear part is nonzero")
    alpha, beta, delta = F.coefficient(2, 0), F.coefficient(1, 1), F.coefficient(0, 2)
    floor_p = alpha - abs(beta) / 2
    floor_x = delta - abs(beta) / 2
    if floor_p <= 0 or floor_x <= 0:
        raise CornerCertificateError(
            "corner certificate inapplicable: quadratic part is not dominated by p^2 + x^2"
        )
    tail = F - F.degree_part(2)
    K = monomial_tail_bound(tail, s)
    floor = min(floor_p, floor_x)
    return CornerCertificate((alpha, beta, delta), floor, K, floor - K, s)


def corner_certificate(F: BivariatePoly, s) -> Fraction:
    """Margin ``mu`` such that ``F >= mu (p^2 + x^2)`` on ``[0, s]^2``.

    ``mu > 0`` certifies ``F >= 0`` there with equality only at the origin.
    """
    return corner_certificate_detail(F, s).margin


# -- subdivision -----------------------------------------------------------

CERT_BERNSTEIN = "certified-by-bernstein"
CERT_CORNER = "certified-by-corner"
SUBDIVIDED = "subdivided"
FAILED = "failed"


@dataclass
class CertNode:
    rect: Rectangle
    depth: int
    status: str
    bernstein_max: Fraction
    corner_margin: Fraction | None = None
    children: list = field(default_factory=list)

    def leaves(self) -> Iterator["CertNode"]:
        if not self.children:
            yield self
        for ch in self.children:
            yield from ch.leaves()

    def walk(self) -> Iterator["CertNode"]:
        yield self
        for ch in self.children:
            yield from ch.walk()

    def to_dict(self) -> dict:
        d = {
            "rect": self.rect.to_json(),
            "depth": self.depth,
            "status": self.status,
            "bernstein_max": str(self.bernstein_max),
        }
        if self.corner_margin is not None:
            d["corner_margin"] = str(self.corner_margin)
        if self.children:
            d["children"] = [c.to_dict() for c in self.children]
        return d


@dataclass
class CertificationReport:
    bound: Fraction
    strategy: str
    max_depth: int
    root: CertNode

    @property
    def certified(self) -> bool:
        return all(leaf.status in (CERT_BERNSTEIN, CERT_CORNER) for leaf in self.root.leaves())

    @property
    def verdict(self) -> str:
        return "certified" if self.certified else "not-certified"

    def find(self, rect: Rectangle) -> CertNode | None:
        return next((n for n in self.root.walk() if n.rect == rect), None)

    def nodes_at_depth(self, depth: int) -> list:
        return [n for n in self.root.walk() if n.depth == depth]

    def to_dict(self) -> dict:
        return {
            "bound": str(self.bound),
            "strategy": self.strategy,
            "max_depth": self.max_depth,
            "verdict": self.verdict,
            "leaves": sum(1 for _ in self.root.leaves()),
            "tree": self.root.to_dict(),
        }


def certify_upper_bound(
    poly: BivariatePoly,
    rect: Rectangle,
    bound,
    max_depth: int = DEFAULT_MAX_DEPTH,
    strategy: str = "auto",
    corner_fallback: bool = False,
    bidegree=None,
) -> CertificationReport:
    """Certify ``poly <= bound`` on ``rect`` by depth-first subdivision.

    A box is certified when its largest Bernstein coefficient is at most
    ``bound``.  With ``corner_fallback``, a box ``[0, b] x [0, d]`` that fails
    is also tried with the corner certificate for ``bound - poly`` on
    ``[0, max(b, d)]^2`` before being split.  Children appear in canonical
    order regardless of evaluation order.
    """
    if max_depth < 0:
        raise ValueError("max_depth must be nonnegative")
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    bound = _frac(bound)
    target = bidegree or poly.bidegree
    margin_poly = bound - poly if corner_fallback else None

    def visit(box: Rectangle, depth: int) -> CertNode:
        hi = bernstein_range(bernstein_patch(poly, box, target))[1]
        node = CertNode(box, depth, FAILED, hi)
        if hi <= bound:
            node.status = CERT_BERNSTEIN
            return node
        if margin_poly is not None and box.anchored_at_origin():
            try:
                node.corner_margin = corner_certificate(margin_poly, max(box.widths))
            except CornerCertificateError:
                node.corner_margin = None
            if node.corner_margin is not None and node.corner_margin > 0:
                node.status = CERT_CORNER
                return node
        if depth < max_depth:
            node.status = SUBDIVIDED
            node.children = [visit(ch, depth + 1) for ch in box.split(strategy)]
        return node

    return CertificationReport(bound, strategy, max_depth, visit(rect, 0))
