"""Slow, independent reference implementations used only by the tests.

None of these share code with the package: series are plain lists of
Fractions, determinants use the Leibniz expansion, and Bernstein
coefficients come from solving an interpolation system.
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction


# -- power series as coefficient lists -------------------------------------

def ps_mul(a, b, n):
    out = [Fraction(0)] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def ps_exp_taylor(u, n):
    """``sum_k u^k / k!`` truncated at degree ``n``; requires ``u[0] == 0``."""
    assert u[0] == 0
    total = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for k in range(n + 1):
        for i in range(n + 1):
            total[i] += power[i] / math.factorial(k)
        power = ps_mul(power, u, n)
    return total


def naive_f_from_schwarz(c, n):
    """Coefficients ``f_0..f_n`` of ``f`` with ``1 + z f''/f' = phi(w)``, ``w = sum c_k z^k``."""
    w = [Fraction(0)] + [Fraction(x) for x in c] + [Fraction(0)] * n
    w = w[: n + 1]
    w2 = ps_mul(w, w, n)
    g = [w[i] + w2[i] / 4 for i in range(n + 1)]  # phi(w) - 1
    log_fp = [Fraction(0)] + [g[k] / k for k in range(1, n + 1)]  # integral of g/z
    fp = ps_exp_taylor(log_fp, n)
    return [Fraction(0)] + [fp[k - 1] / k for k in range(1, n + 1)]


def caratheodory_from_schwarz_series(c, n):
    """Coefficients of ``p = (1 + w)/(1 - w)``."""
    w = [Fraction(0)] + [Fraction(x) for x in c]
    w = (w + [Fraction(0)] * (n + 1))[: n + 1]
    out = [Fraction(1)] + [Fraction(0)] * n
    power = [Fraction(1)] + [Fraction(0)] * n
    for _ in range(n):
        power = ps_mul(power, w, n)
        for i in range(n + 1):
            out[i] += 2 * power[i]
    return out


# -- determinants ----------------------------------------------------------

def leibniz_det(m):
    n = len(m)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term = term * m[i][perm[i]]
        total = total + term
    return total


def hankel_oracle(a, q, n):
    """``a[k]`` is ``a_k`` (``a[1] == 1``)."""
    return leibniz_det([[a[n + i + j] for j in range(q)] for i in range(q)])


# -- Bernstein coefficients by interpolation --------------------------------

def _nodes(deg):
    if deg == 0:
        return [Fraction(1, 2)]
    return [
        Fraction((1 - math.cos(math.pi * (2 * i + 1) / (2 * (deg + 1)))) / 2).limit_denominator(997)
        for i in range(deg + 1)
    ]


def _solve(A, b):
    n = len(A)
    M = [list(row) + [rhs] for row, rhs in zip(A, b)]
    for col in range(n):
        piv = next(r for r in range(col, n) if M[r][col] != 0)
        M[col], M[piv] = M[piv], M[col]
        for r in range(n):
            if r != col and M[r][col] != 0:
                f = M[r][col] / M[col][col]
                M[r] = [x - f * y for x, y in zip(M[r], M[col])]
    return [M[i][n] / M[i][i] for i in range(n)]


def _bern(deg, k, t):
    return math.comb(deg, k) * t**k * (1 - t) ** (deg - k)


def bernstein_by_interpolation(value, M, N):
    """Bernstein coefficients of the bidegree-(M, N) polynomial ``value(u, v)`` on [0,1]^2."""
    un, vn = _nodes(M), _nodes(N)
    Au = [[_bern(M, k, u) for k in range(M + 1)] for u in un]
    Av = [[_bern(N, l, v) for l in range(N + 1)] for v in vn]
    vals = [[value(u, v) for v in vn] for u in un]
    # solve along v for each u node, then along u for each l
    stage = [_solve(Av, row) for row in vals]  # stage[i][l]
    cols = [_solve(Au, [stage[i][l] for i in range(M + 1)]) for l in range(N + 1)]
    return [[cols[l][k] for l in range(N + 1)] for k in range(M + 1)]
