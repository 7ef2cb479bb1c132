"""The target function phi(z) = (1 + z/2)**2 and the class it generates.

Besides exact and floating evaluation this module carries a grid-based
regression check of the geometric properties phi needs (modulus bounds,
univalence, starlikeness about 1, positive real part) and the exact
construction of ``f`` from a Schwarz function via
``f = int_0^z exp(int_0^zeta (phi(w(t)) - 1)/t dt) dzeta``.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, field
from fractions import Fraction

import numpy as np

from .scalar import GaussianRational
from .series import (
    TruncatedSeries,
    compose,
    derivative,
    divide,
    divide_by_z,
    integrate_from_zero,
    series_exp,
)

PHI_COEFFS = (Fraction(1), Fraction(1), Fraction(1, 4))
PHI_CLOSED_FORM = "(1+z/2)^2"

RE_PHI_FLOOR = 0.25
MODULUS_MIN = 0.25
MODULUS_MAX = 2.25
COLLISION_TOL = 1e-12


def phi_series(order: int = 2) -> TruncatedSeries:
    """phi as a truncated series; exact at any order since phi is a polynomial."""
    return TruncatedSeries.from_coeffs(PHI_COEFFS, max(order, 0))


def phi_eval(z):
    """Evaluate (1 + z/2)**2.

    Rational and Gaussian-rational inputs give exact results; floats and
    complex numbers (or numpy arrays of them) are evaluated in floating point.
    """
    if isinstance(z, (int, Fraction)):
        w = 1 + Fraction(z) / 2
        return w * w
    if isinstance(z, GaussianRational):
        w = 1 + z / 2
        return w * w
    w = 1 + z / 2
    return w * w


@dataclass
class PhiPropertyReport:
    radial_steps: int
    angular_steps: int
    min_re_phi_interior: float
    min_re_phi_closed: float
    min_abs_phi: float
    max_abs_phi: float
    min_re_starlike_quotient: float
    univalence_collisions: int
    min_collision_sum_modulus: float | None
    checks: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _polar_grid(radial_steps: int, angular_steps: int):
    r = np.linspace(0.0, 1.0, radial_steps)
    theta = 2.0 * np.pi * np.arange(angular_steps) / angular_steps
    return r, theta


def check_phi_properties(radial_steps: int = 64, angular_steps: int = 256) -> PhiPropertyReport:
    """Grid regression check of the Ma-Minda properties of phi.

    The grid is ``r in linspace(0, 1, radial_steps)`` and
    ``theta = 2*pi*k/angular_steps``; ``r = 1`` and ``theta = pi`` are on the
    grid whenever ``angular_steps`` is even, so the extremes ``|phi(-1)| =
    1/4`` and ``|phi(1)| = 9/4`` are hit exactly.
    """
    if radial_steps < 2 or angular_steps < 2:
        raise ValueError("need at least 2 radial and 2 angular steps")
    r, theta = _polar_grid(radial_steps, angular_steps)
    c, s = np.cos(theta), np.sin(theta)
    # snap rounding noise so theta = pi/2, pi, ... give exact axis points
    c[np.abs(c) < 1e-15] = 0.0
    s[np.abs(s) < 1e-15] = 0.0
    z = r[:, None] * (c + 1j * s)[None, :]
    phi = phi_eval(z)
    interior = r < 1.0

    re_phi = phi.real
    min_re_interior = float(re_phi[interior].min())
    min_re_closed = float(re_phi.min())
    mod = np.abs(phi)
    min_mod, max_mod = float(mod.min()), float(mod.max())

    # starlikeness about phi(0)=1 reduces to Re((1+z/2)/(1+z/4)) > 0
    quotient = (1 + z / 2) / (1 + z / 4)
    min_star = float(quotient[interior].real.min())

    collisions, min_sum = _univalence_scan(z[interior], phi[interior])

    checks = {
        "modulus_bounds": MODULUS_MIN - 1e-15 <= min_mod and max_mod <= MODULUS_MAX + 1e-15,
        "positive_real_part": min_re_interior > RE_PHI_FLOOR,
        "starlike_about_one": min_star > 0.0,
        "univalence": collisions == 0,
    }
    return PhiPropertyReport(
        radial_steps=radial_steps,
        angular_steps=angular_steps,
        min_re_phi_interior=min_re_interior,
        min_re_phi_closed=min_re_closed,
        min_abs_phi=min_mod,
        max_abs_phi=max_mod,
        min_re_starlike_quotient=min_star,
        univalence_collisions=collisions,
        min_collision_sum_modulus=min_sum,
        checks=checks,
    )


def _univalence_scan(z: np.ndarray, phi: np.ndarray):
    """Count distinct grid points sharing a phi value (to COLLISION_TOL).

    Points are bucketed by rounded phi so the scan is linear in grid size.
    Returns the count and the smallest ``|z1 + z2|`` over colliding pairs;
    a genuine collision needs ``z1 + z2 = -4``.
    """
    z = z.ravel()
    phi = phi.ravel()
    # the polar grid repeats z = 0 for every angle
    keys = np.round(z.real, 12) + 1j * np.round(z.imag, 12)
    _, first = np.unique(keys, return_index=True)
    keep = np.sort(first)
    z, phi = z[keep], phi[keep]

    scale = 1.0 / (10 * COLLISION_TOL)
    buckets: dict = {}
    collisions = 0
    min_sum = None
    for idx in range(len(z)):
        p = complex(phi[idx])
        kr, ki = math.floor(p.real * scale), math.floor(p.imag * scale)
        for dr in (-1, 0, 1):
            for di in (-1, 0, 1):
                for j in buckets.get((kr + dr, ki + di), ()):
                    if abs(phi[j] - p) <= COLLISION_TOL and abs(z[j] - z[idx]) > COLLISION_TOL:
                        collisions += 1
                        s = float(abs(z[j] + z[idx]))
                        min_sum = s if min_sum is None else min(min_sum, s)
        buckets.setdefault((kr, ki), []).append(idx)
    return collisions, min_sum


def build_f_from_schwarz(w: TruncatedSeries, target_order: int) -> TruncatedSeries:
    """The normalized ``f`` with ``1 + z f''/f' = phi(w)``, through ``z**target_order``.

    ``w`` must vanish at 0 and be known through ``z**(target_order - 1)``.
    """
    if w.coeffs[0] != 0:
        raise ValueError("Schwarz function must vanish at 0")
    if target_order < 1:
        raise ValueError("target order must be at least 1")
    if w.order < target_order - 1:
        raise ValueError(
            f"Schwarz data of order {w.order} cannot determine f through z^{target_order}"
        )
    if target_order == 1:
        return TruncatedSeries(1, (0, 1))
    n = target_order - 1
    w = w.truncate(n)
    integrand = divide_by_z(compose(phi_series(n), w) - 1)
    log_fprime = integrate_from_zero(integrand)
    return integrate_from_zero(series_exp(log_fprime))


def subordination_residual(f: TruncatedSeries, w: TruncatedSeries) -> TruncatedSeries:
    """``1 + z f''/f' - phi(w)``; identically zero for ``f`` built from ``w``."""
    fp = derivative(f)
    fpp = derivative(fp)
    ratio = divide(fpp, fp.truncate(fpp.order))
    lhs = TruncatedSeries(ratio.order + 1, (Fraction(0),) + ratio.coeffs) + 1
    rhs = compose(phi_series(w.order), w)
    return lhs - rhs


def extremal_function(power: int, order: int = 9) -> TruncatedSeries:
    """``f`` generated by the Schwarz function ``w(z) = z**power``."""
    w = TruncatedSeries.monomial(power, max(order - 1, power))
    return build_f_from_schwarz(w, order)
