"""End-to-end verification of the sharp bounds |H2(2)| <= 1/36 and |H3(1)| <= 1/144.

Each verifier runs a fixed list of independent sub-checks and collects them
in a :class:`TheoremReport`.  Identities are checked in exact arithmetic,
inequalities on deterministic rational grids or with Bernstein certificates,
and a seeded randomized search over the parameter cuboid cross-validates the
final bound.  A search value above a proven bound is reported as an
inconsistency together with the offending parameters.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .bernstein import (
    BivariatePoly,
    P,
    Rectangle,
    X,
    bernstein_patch,
    bernstein_range,
    certify_upper_bound,
    corner_certificate_detail,
    degree_abs_sums,
)
from .functionals import (
    H2_SCALE,
    H3_SCALE,
    CoefficientVector,
    SchwarzCoeffs,
    coeffs_from_caratheodory,
    coeffs_from_schwarz,
    h2_normalized_from_p,
    h3_normalized_from_c,
    hankel_h2,
    hankel_h3,
)
from .parametrizations import (
    LZParams,
    PSParams,
    lz_expand,
    params_to_json,
    ps_expand,
    random_exact,
    sample_cuboid,
)
from .phi import extremal_function
from .scalar import GaussianRational, abs2, exact_abs, rational_to_json, scalar_to_json
from .ykc import YkcInput, ykc_closed_form

SEARCH_SLACK = 1e-12
H2_BOUND = Fraction(1, 36)
H3_BOUND = Fraction(1, 144)
H3_CERT_LEVEL = Fraction(480)


class TranscriptionError(RuntimeError):
    """Two independently entered forms of the same polynomial disagree."""


# -- reports ---------------------------------------------------------------

@dataclass
class SubCheck:
    key: str
    title: str
    passed: bool
    details: dict = field(default_factory=dict)
    runtime: float = 0.0

    def to_dict(self) -> dict:
        return {"key": self.key, "title": self.title, "passed": self.passed, "details": self.details}


@dataclass
class TheoremReport:
    theorem: str
    bound: Fraction
    witness: dict
    subchecks: list
    runtime: float = 0.0
    config: dict = field(default_factory=dict)

    @property
    def certified(self) -> bool:
        return bool(self.subchecks) and all(s.passed for s in self.subchecks)

    @property
    def verdict(self) -> str:
        return "certified" if self.certified else "not-certified"

    def subcheck(self, key: str) -> SubCheck:
        for s in self.subchecks:
            if s.key == key:
                return s
        raise KeyError(key)

    def to_dict(self) -> dict:
        """Deterministic content only; runtimes live in :meth:`timing`."""
        return {
            "theorem": self.theorem,
            "verdict": self.verdict,
            "bound": str(self.bound),
            "bound_rational": rational_to_json(self.bound, decimal=True),
            "witness": self.witness,
            "config": self.config,
            "subchecks": [s.to_dict() for s in self.subchecks],
        }

    def timing(self) -> dict:
        return {"total_seconds": self.runtime, "subchecks": {s.key: s.runtime for s in self.subchecks}}


def _run_subchecks(jobs: list, threads: int) -> list:
    """Run ``(key, title, fn)`` jobs; output order is the job order."""

    def one(job):
        key, title, fn = job
        t0 = time.perf_counter()
        try:
            passed, details = fn()
        except Exception as exc:  # a crashing check is a failed check
            passed, details = False, {"error": f"{type(exc).__name__}: {exc}"}
        return SubCheck(key, title, bool(passed), details, time.perf_counter() - t0)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, jobs))
    return [one(j) for j in jobs]


def _q(x: Fraction) -> str:
    return str(Fraction(x))


# -- H2 proof objects --------------------------------------------------------

@dataclass(frozen=True)
class H2ProofObject:
    p1: Fraction
    A: Fraction
    B: Fraction
    C: Fraction
    D0: Fraction
    A_t: Fraction | None = None
    B_t: Fraction | None = None
    C_t: Fraction | None = None

    def phi_value(self, gamma, eta):
        """``A + B gamma + C gamma^2 + eta D0 (1 - |gamma|^2)``."""
        return self.A + self.B * gamma + self.C * gamma**2 + eta * self.D0 * (1 - abs2(gamma))

    def normalized(self) -> YkcInput:
        if self.A_t is None:
            raise ValueError("normalized coefficients need 0 < p1 < 2")
        return YkcInput(self.A_t, self.B_t, self.C_t)


def h2_proof_object(p1) -> H2ProofObject:
    p1 = Fraction(p1)
    if not 0 <= p1 <= 2:
        raise ValueError(f"p1 must lie in [0, 2], got {p1}")
    s = p1 * p1
    A = -(s * s)
    B = 2 * s * (4 - s)
    C = 2 * (-32 + 4 * s + s * s)
    D0 = 12 * p1 * (4 - s)
    if 0 < p1 < 2:
        return H2ProofObject(p1, A, B, C, D0, A / D0, B / D0, C / D0)
    return H2ProofObject(p1, A, B, C, D0)


# -- H3 surfaces -------------------------------------------------------------

ONE = BivariatePoly.constant(1)
_U = ONE - P**2  # 1 - p^2
_V = ONE - X**2  # 1 - x^2

# pieces of the triangle-inequality majorant, grouped by power of y
H3_BASE = (
    7 * P**6
    + 42 * P**4 * _U * X
    + 12 * P**2 * (17 - 26 * P**2 + 9 * P**4) * X**2
    + 16 * (7 * _U + 20 * P**2 * _U + 4 * P**4 * _U) * X**3
    + 96 * P**2 * (P**2 - 1) ** 2 * X**4
)
H3_Y_LINEAR = 96 * _V * P * _U * (X + P**2 + 2 * X * P**2 + 2 * X**2 * _U)
H3_Y_SQUARE = 48 * _V * _U * (10 * _V * _U + 3 * (P**2 + 4 * X * _U) * X)
H3_RHO = 144 * _V * _U * (P**2 + 4 * X * _U)  # multiplies (1 - y^2)


@dataclass(frozen=True)
class H3Surface:
    """A polynomial in ``(p, x)``, or a quadratic in ``y`` with such coefficients."""

    which: str
    y_parts: tuple  # coefficients of y^0, y^1, y^2

    @property
    def poly(self) -> BivariatePoly:
        """The ``(p, x)`` polynomial (only for surfaces without ``y``)."""
        if any(part != 0 for part in self.y_parts[1:]):
            raise ValueError(f"{self.which} depends on y")
        return self.y_parts[0]

    def at_y(self, y) -> BivariatePoly:
        y = Fraction(y)
        return self.y_parts[0] + self.y_parts[1] * y + self.y_parts[2] * (y * y)

    def __call__(self, p, x, y=0):
        y0, y1, y2 = (part(p, x) for part in self.y_parts)
        return y0 + y1 * y + y2 * y * y

    def eval_float(self, p, x, y=0.0):
        y0, y1, y2 = (part.eval_float(p, x) for part in self.y_parts)
        return y0 + y1 * y + y2 * y * y


def _printed_g1() -> BivariatePoly:
    """The separately displayed form of H1 at y = 1."""
    return (
        7 * P**6
        + 42 * P**4 * _U * X
        + 12 * P**2 * (17 - 26 * P**2 + 9 * P**4) * X**2
        + 16 * (7 * _U + 20 * P**2 * _U + 4 * P**4 * _U) * X**3
        + 96 * P**2 * (P**2 - 1) ** 2 * X**4
        + 96 * P * _U * _V * (P**2 + X + 2 * P**2 * X + 2 * _U * X**2)
        + 48 * _U * _V * (3 * X * (P**2 + 4 * _U * X) + 10 * _U * _V)
    )


def _printed_g2() -> BivariatePoly:
    return (
        7 * P**6
        + 42 * P**4 * _U * X
        + 12 * P**2 * (17 - 26 * P**2 + 9 * P**4) * X**2
        + 16 * (7 * _U + 20 * P**2 * _U + 4 * P**4 * _U) * X**3
        + 96 * P**2 * (P**2 - 1) ** 2 * X**4
        + 144 * _U * (P**2 + 4 * _U * X) * _V
        + 96 * P * _U * _V * (P**2 + X + 2 * P**2 * X + 2 * _U * X**2)
    )


def _from_rows(rows: list) -> BivariatePoly:
    """``rows[j]`` lists the coefficients of ``p^0..p^6`` multiplying ``x^j``."""
    return BivariatePoly.from_terms({(i, j): c for j, row in enumerate(rows) for i, c in enumerate(row)})


# power-basis expansions as displayed, rows indexed by the power of x
PRINTED_G2_ROWS = [
    [0, 0, 144, 96, -144, -96, 7],
    [576, 96, -1152, 96, 618, -192, -42],
    [0, 192, 60, -480, -168, 288, 108],
    [-464, -96, 1360, -96, -832, 192, -64],
    [0, -192, 96, 384, -192, -192, 96],
]
PRINTED_F_ROWS = [
    [0, 0, 960, -96, -480, 96, -7],
    [0, -96, -144, -96, 102, 192, 42],
    [384, -192, -972, 480, 696, -288, -108],
    [-112, 96, -64, 96, 112, -192, 64],
    [96, 192, -288, -384, 288, 192, -96],
]


def h3_surfaces() -> dict:
    """``{"H", "H1", "G1", "G2"}`` surfaces, cross-checked against the printed forms."""
    H = H3Surface("H", (H3_BASE + H3_RHO, H3_Y_LINEAR, H3_Y_SQUARE - H3_RHO))
    zero = BivariatePoly.zero()
    H1 = H3Surface("H1", (H3_BASE + H3_Y_LINEAR + H3_RHO, zero, H3_Y_SQUARE - H3_RHO))
    G1 = H3Surface("G1", (H1.at_y(1), zero, zero))
    G2 = H3Surface("G2", (H1.at_y(0), zero, zero))

    checks = {
        "G1 vs displayed G1": (G1.poly, _printed_g1()),
        "G2 vs displayed G2": (G2.poly, _printed_g2()),
        "G2 vs displayed power basis": (G2.poly, _from_rows(PRINTED_G2_ROWS)),
        "480 - G1 vs displayed power basis": (H3_CERT_LEVEL - G1.poly, _from_rows(PRINTED_F_ROWS)),
        "H at y=1 minus H1 at y=1": (H.at_y(1), H1.at_y(1)),
    }
    for name, (lhs, rhs) in checks.items():
        if lhs != rhs:
            raise TranscriptionError(f"surface mismatch: {name}")
    if G1.poly.true_bidegree() != (6, 4) or G2.poly.true_bidegree() != (6, 4):
        raise TranscriptionError("G1 and G2 must have bidegree (6, 4)")
    return {"H": H, "H1": H1, "G1": G1, "G2": G2}


def h3_decomposition(params: PSParams) -> tuple:
    """``(A1, B1, C1, D1)`` with ``69120 H3 = A1 + B1 eta + C1 eta^2 + D1 rho``."""
    c, g = params.c1, params.gamma
    if not params.exact:
        c, g = float(c), complex(g)
    gb = g.conjugate() if isinstance(g, (complex, GaussianRational)) else g
    G = abs2(g)
    E = abs2(params.eta)
    s = c * c - 1
    A1 = (
        -7 * c**6
        - 42 * g * c**4 * s
        + 96 * g**4 * c**2 * s**2
        - 12 * g**2 * c**2 * (17 - 26 * c**2 + 9 * c**4)
        - 16 * g**3 * (-7 + 27 * c**2 - 24 * c**4 + 4 * c**6)
    )
    B1 = 96 * (G - 1) * c * s * (g + c**2 + 2 * g * c**2 + 2 * g**2 * s)
    C1 = -48 * (G - 1) * s * (-10 * s + 10 * G * s - 3 * (c**2 + 4 * g * s) * gb)
    D1 = 144 * (G - 1) * (E - 1) * s * (c**2 + 4 * g * s)
    return A1, B1, C1, D1


# -- vectorized float evaluation for the randomized search -----------------

def _param_arrays(samples: list, first: str):
    head = np.array([float(getattr(s, first)) for s in samples])
    g = np.array([complex(s.gamma) for s in samples])
    e = np.array([complex(s.eta) for s in samples])
    r = np.array([complex(s.rho) for s in samples])
    return head, g, e, r


def h2_search_values(samples: list) -> np.ndarray:
    """``|H2(2)|`` in double precision, one per LZ sample."""
    p1, g, e, _ = _param_arrays(samples, "p1")
    t = 4 - p1**2
    p2 = (p1**2 + g * t) / 2
    p3 = (p1**3 + 2 * t * p1 * g - t * p1 * g**2 + 2 * t * (1 - np.abs(g) ** 2) * e) / 4
    a2 = p1 / 4
    a3 = (p1**2 + 8 * p2) / 96
    a4 = (-(p1**3) + 32 * p3) / 768
    return np.abs(a2 * a4 - a3**2)


def h3_search_values(samples: list) -> np.ndarray:
    """``|H3(1)|`` in double precision, one per PS sample."""
    c1, g, e, r = _param_arrays(samples, "c1")
    s = 1 - c1**2
    og = 1 - np.abs(g) ** 2
    oe = 1 - np.abs(e) ** 2
    c2 = s * g
    c3 = s * (e * og - c1 * g**2)
    c4 = s * (c1**2 * g**3 - og * (2 * c1 * g * e + np.conj(g) * e**2) + og * oe * r)
    a2 = c1 / 2
    a3 = (5 * c1**2 + 4 * c2) / 24
    a4 = (-2 * c1**3 + c1 * c2 + 0.75 * c1 * (5 * c1**2 + 4 * c2) + 2 * c3) / 24
    a5 = (43 * c1**4 + 184 * c1**2 * c2 + 72 * c2**2 + 176 * c1 * c3 + 96 * c4) / 1920
    h3 = a3 * (a2 * a4 - a3**2) - a4 * (a4 - a2 * a3) + a5 * (a3 - a2**2)
    return np.abs(h3)


def _search(samples: list, values: np.ndarray, exact_value: Callable, bound: Fraction, n_corners: int) -> tuple:
    worst = int(np.argmax(values))
    corner_best = max(exact_value(s) for s in samples[:n_corners])
    over = np.flatnonzero(values > float(bound) + SEARCH_SLACK)
    details = {
        "samples": len(samples),
        "max_abs": float(values[worst]),
        "argmax": params_to_json(samples[worst]),
        "corner_max_abs": _q(corner_best),
        "corner_attains_bound": corner_best == bound,
    }
    if len(over):
        details["status"] = "inconsistency found"
        details["violations"] = [params_to_json(samples[i]) for i in over[:10]]
        return False, details
    return corner_best == bound, details


# -- H2 ----------------------------------------------------------------------

@dataclass
class H2Config:
    samples: int = 100_000
    seed: int = 0
    grid: int = 199
    identity_samples: int = 500

    def __post_init__(self):
        if self.samples < 81:
            raise ValueError("search needs at least the 81 corner samples")
        if self.grid < 1 or self.identity_samples < 1:
            raise ValueError("grid and identity sample counts must be positive")


def h2_grid(n: int) -> list:
    """``n`` evenly spaced rationals strictly inside (0, 2)."""
    return [Fraction(2 * k, n + 1) for k in range(1, n + 1)]


def _h2_identity(cfg: H2Config):
    mism = []
    samples = random_exact(cfg.seed, cfg.identity_samples, "lz")
    for s in samples:
        pc = lz_expand(s)
        direct = h2_normalized_from_p(pc.p1, pc.p2, pc.p3)
        det = H2_SCALE * hankel_h2(coeffs_from_caratheodory(pc))
        phi = h2_proof_object(s.p1).phi_value(s.gamma, s.eta)
        if not (direct == det == phi):
            mism.append(params_to_json(s))
    return not mism, {"samples": len(samples), "mismatches": len(mism), "first_mismatches": mism[:5]}


def _h2_grid(cfg: H2Config):
    bad = []
    for p1 in h2_grid(cfg.grid):
        obj = h2_proof_object(p1)
        res = ykc_closed_form(obj.normalized())
        ok = (
            obj.A_t * obj.C_t >= 0
            and abs(obj.C_t) > 1
            and abs(obj.B_t) >= 2 * (1 - abs(obj.C_t))
            and isinstance(res.value, Fraction)
            and obj.D0 * res.value == 64 - 3 * p1**4
        )
        if not ok:
            bad.append({"p1": _q(p1), "branch": res.branch, "value": str(res.value)})
    sample = h2_proof_object(1)
    return not bad, {
        "points": cfg.grid,
        "failures": bad[:10],
        "at_p1_1": str(sample.D0 * ykc_closed_form(sample.normalized()).value),
    }


def _h2_endpoints():
    out = {}
    for p1, expected in ((0, 64), (2, 16)):
        obj = h2_proof_object(p1)
        # D0 vanishes, so |Phi| <= |A| + |B| + |C| with equality at gamma = +-1
        top = max(abs(obj.phi_value(Fraction(g), 0)) for g in (1, -1))
        out[str(p1)] = {"D0": _q(obj.D0), "max_abs": _q(top)}
        out[str(p1)]["ok"] = obj.D0 == 0 and top == abs(obj.A) + abs(obj.B) + abs(obj.C) == expected
    return all(v["ok"] for v in out.values()), out


def _h2_supremum(cfg: H2Config):
    interior = max(64 - 3 * p1**4 for p1 in h2_grid(cfg.grid))
    sup = Fraction(64)
    ok = interior < sup and sup / H2_SCALE == H2_BOUND
    return ok, {"sup_normalized": _q(sup), "interior_grid_max": _q(interior), "bound": _q(sup / H2_SCALE)}


def _h2_witness():
    f = extremal_function(2, 5)
    via_series = hankel_h2(CoefficientVector.from_series(f))
    via_formula = hankel_h2(coeffs_from_schwarz(SchwarzCoeffs(0, 1, 0, 0)))
    ok = via_series == via_formula == -H2_BOUND
    return ok, {"series": str(f), "value": _q(via_series)}


def _h2_search(cfg: H2Config):
    samples = sample_cuboid(cfg.seed, cfg.samples, "lz")
    values = h2_search_values(samples)

    def exact(s):
        return abs(hankel_h2(coeffs_from_caratheodory(lz_expand(s))))

    return _search(samples, values, exact, H2_BOUND, 81)


def verify_h2(cfg: H2Config | None = None, threads: int = 1) -> TheoremReport:
    cfg = cfg or H2Config()
    t0 = time.perf_counter()
    jobs = [
        ("a", "2304*H2 equals Phi(p1, gamma, eta) exactly", lambda: _h2_identity(cfg)),
        ("b", "D0*Y(A~, B~, C~) = 64 - 3 p1^4 on the p1 grid", lambda: _h2_grid(cfg)),
        ("c", "endpoint values 64 (p1 = 0) and 16 (p1 = 2)", _h2_endpoints),
        ("d", "supremum 64 gives bound 1/36", lambda: _h2_supremum(cfg)),
        ("e", "w(z) = z^2 gives H2 = -1/36", _h2_witness),
        ("f", "randomized search stays below 1/36", lambda: _h2_search(cfg)),
    ]
    checks = _run_subchecks(jobs, threads)
    witness = {
        "omega": "z^2",
        "schwarz": [0, 1, 0, 0],
        "value": scalar_to_json(-H2_BOUND, decimal=True),
    }
    cfgd = {"samples": cfg.samples, "seed": cfg.seed, "grid": cfg.grid, "identity_samples": cfg.identity_samples}
    return TheoremReport("H2(2)", H2_BOUND, witness, checks, time.perf_counter() - t0, cfgd)


# -- H3 ----------------------------------------------------------------------

@dataclass
class H3Config:
    samples: int = 100_000
    seed: int = 0
    identity_samples: int = 500
    px_grid: int = 101
    y_grid: int = 11
    depth: int = 2
    strategy: str = "paper-quadrants"

    def __post_init__(self):
        if self.samples < 81:
            raise ValueError("search needs at least the 81 corner samples")
        if self.identity_samples < 1:
            raise ValueError("identity sample count must be positive")
        if self.depth < 0:
            raise ValueError("depth must be nonnegative")
        if self.px_grid < 2 or self.y_grid < 2:
            raise ValueError("grids need at least 2 points per axis")


def _h3_identity(cfg: H3Config, samples: list):
    mism = []
    for s in samples:
        c = ps_expand(s)
        direct = h3_normalized_from_c(c)
        det = H3_SCALE * hankel_h3(coeffs_from_schwarz(c))
        A1, B1, C1, D1 = h3_decomposition(s)
        split = A1 + B1 * s.eta + C1 * s.eta**2 + D1 * s.rho
        if not (direct == det == split):
            mism.append(params_to_json(s))
    return not mism, {"samples": len(samples), "mismatches": len(mism), "first_mismatches": mism[:5]}


def _h3_domination(samples: list, H: H3Surface):
    bad = []
    for s in samples:
        lhs2 = abs2(H3_SCALE * hankel_h3(coeffs_from_schwarz(ps_expand(s))))
        x, y = exact_abs(s.gamma), exact_abs(s.eta)
        if x is None or y is None:
            raise ValueError("identity samples must have rational moduli")
        rhs = H(s.c1, x, y)
        if rhs < 0 or lhs2 > rhs * rhs:
            bad.append(params_to_json(s))
    return not bad, {"samples": len(samples), "violations": len(bad), "first_violations": bad[:5]}


def _h3_y_coefficient(cfg: H3Config):
    n = cfg.px_grid
    pts = [Fraction(k, n - 1) for k in range(n)]
    neg = [(str(p), str(x)) for p in pts for x in pts if H3_Y_LINEAR(p, x) < 0]
    lo = bernstein_range(bernstein_patch(H3_Y_LINEAR, Rectangle.unit()))[0]
    return not neg, {
        "grid": f"{n}x{n}",
        "negative_points": neg[:10],
        "bernstein_min": _q(lo),
        "bernstein_proves_nonnegative": lo >= 0,
    }


def _h3_majorant(cfg: H3Config, H: H3Surface, H1: H3Surface):
    pg = np.linspace(0.0, 1.0, cfg.px_grid)
    yg = np.linspace(0.0, 1.0, cfg.y_grid)
    p, x, y = np.meshgrid(pg, pg, yg, indexing="ij")
    diff = H.eval_float(p, x, y) - H1.eval_float(p, x, y)
    worst = float(diff.max())
    return worst <= 1e-9, {"grid": f"{cfg.px_grid}x{cfg.px_grid}x{cfg.y_grid}", "max_H_minus_H1": worst}


def _h3_g1(cfg: H3Config, G1: H3Surface):
    rep = certify_upper_bound(
        G1.poly, Rectangle.unit(), H3_CERT_LEVEL, max_depth=cfg.depth, strategy=cfg.strategy, corner_fallback=True
    )
    details = {"certification": rep.to_dict()}
    corner_nodes = [n for n in rep.root.walk() if n.status == "certified-by-corner"]
    if corner_nodes:
        node = corner_nodes[0]
        cert = corner_certificate_detail(H3_CERT_LEVEL - G1.poly, max(node.rect.widths))
        tail = (H3_CERT_LEVEL - G1.poly) - (H3_CERT_LEVEL - G1.poly).degree_part(2)
        details["corner"] = {
            "rect": node.rect.to_json(),
            "quadratic": [_q(v) for v in cert.quadratic],
            "quadratic_floor": _q(cert.quadratic_floor),
            "degree_sums": {str(d): _q(v) for d, v in degree_abs_sums(tail).items()},
            "tail_constant": _q(cert.tail_constant),
            "margin": _q(cert.margin),
        }
    return rep.certified, details


def _h3_g2(G2: H3Surface):
    patch = bernstein_patch(G2.poly, Rectangle.unit(), (6, 4))
    lo, hi = bernstein_range(patch)
    return hi <= H3_CERT_LEVEL, {
        "bernstein_max": _q(hi),
        "bernstein_min": _q(lo),
        "matrix": [[_q(c) for c in row] for row in patch.coeffs],
    }


def _h3_bound():
    b = H3_CERT_LEVEL / H3_SCALE
    return b == H3_BOUND, {"level": _q(H3_CERT_LEVEL), "scale": H3_SCALE, "bound": _q(b)}


def _h3_witness():
    f = extremal_function(3, 5)
    via_series = hankel_h3(CoefficientVector.from_series(f))
    via_formula = hankel_h3(coeffs_from_schwarz(SchwarzCoeffs(0, 0, 1, 0)))
    return via_series == via_formula == -H3_BOUND, {"series": str(f), "value": _q(via_series)}


def _h3_search(cfg: H3Config):
    samples = sample_cuboid(cfg.seed, cfg.samples, "ps")
    values = h3_search_values(samples)

    def exact(s):
        return abs(hankel_h3(coeffs_from_schwarz(ps_expand(s))))

    return _search(samples, values, exact, H3_BOUND, 81)


def verify_h3(cfg: H3Config | None = None, threads: int = 1) -> TheoremReport:
    cfg = cfg or H3Config()
    t0 = time.perf_counter()
    surf = h3_surfaces()
    samples = random_exact(cfg.seed, cfg.identity_samples, "ps")
    jobs = [
        ("a", "69120*H3 = A1 + B1 eta + C1 eta^2 + D1 rho exactly", lambda: _h3_identity(cfg, samples)),
        ("b", "69120*|H3| <= H(c1, |gamma|, |eta|)", lambda: _h3_domination(samples, surf["H"])),
        ("c", "coefficient of y in H is nonnegative", lambda: _h3_y_coefficient(cfg)),
        ("d", "H <= H1 on the cuboid grid", lambda: _h3_majorant(cfg, surf["H"], surf["H1"])),
        ("e", "G1 <= 480 on the unit square", lambda: _h3_g1(cfg, surf["G1"])),
        ("f", "G2 <= 1022/3 <= 480 by Bernstein coefficients", lambda: _h3_g2(surf["G2"])),
        ("g", "480/69120 = 1/144", _h3_bound),
        ("h", "w(z) = z^3 gives H3 = -1/144", _h3_witness),
        ("i", "randomized search stays below 1/144", lambda: _h3_search(cfg)),
    ]
    checks = _run_subchecks(jobs, threads)
    witness = {
        "omega": "z^3",
        "schwarz": [0, 0, 1, 0],
        "value": scalar_to_json(-H3_BOUND, decimal=True),
    }
    cfgd = {
        "samples": cfg.samples,
        "seed": cfg.seed,
        "identity_samples": cfg.identity_samples,
        "px_grid": cfg.px_grid,
        "y_grid": cfg.y_grid,
        "depth": cfg.depth,
        "strategy": cfg.strategy,
    }
    return TheoremReport("H3(1)", H3_BOUND, witness, checks, time.perf_counter() - t0, cfgd)
